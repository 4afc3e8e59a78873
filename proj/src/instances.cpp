#include "cx2/instances.hpp"

namespace cx2 {

namespace {

std::string idx(const char* stem, size_t n) { return stem + std::to_string(n); }

}  // namespace

const std::vector<std::string>& instanceKinds() {
    static const std::vector<std::string> kinds = {"object",    "square",           "cell",         "loop",
                                                   "complex",   "extension",        "complexExtension",
                                                   "lemmaDiagram", "grid3x3",          "nonsplit"};
    return kinds;
}

Workspace genInstance(std::uint64_t seed, const std::string& kind, BaseRing ring, const Bounds& b) {
    if (b.maxGens > 6 || b.maxEntry > 9) throw ValidationError("bounds: at most 6 generators and entries up to 9");
    Rng rng(seed);
    Workspace w;
    w.ring = ring;
    if (kind == "object") {
        w.objects["x"] = randomTwoObject(rng, ring, b);
    } else if (kind == "square") {
        w.morphisms["u"] = randomSquare(rng, ring, b);
    } else if (kind == "cell") {
        const TwoCell c = randomCellFrom(rng, randomSquare(rng, ring, b), b);
        w.morphisms["u"] = c.from;
        w.morphisms["v"] = c.to;
        w.cells["alpha"] = c;
    } else if (kind == "loop") {
        w.cells["loop"] = randomLoop(rng, randomTwoObject(rng, ring, b), randomTwoObject(rng, ring, b));
    } else if (kind == "complex") {
        w.complexes["s"] = randomComplex(rng, ring, 3, b);
    } else if (kind == "extension") {
        const Extension e = randomExtension(rng, ring, b);
        w.morphisms["f"] = e.f;
        w.morphisms["g"] = e.g;
        w.cells["eta"] = e.eta;
    } else if (kind == "complexExtension") {
        store(w, randomComplexExtension(rng, ring, 1 + int(uniform(rng, 0, 3)), b));
    } else if (kind == "lemmaDiagram") {
        store(w, randomSnakeDiagram(rng, ring, SnakeRows::Extensions, b));
    } else if (kind == "grid3x3") {
        store(w, random3x3(rng, ring, b));
    } else if (kind == "nonsplit") {
        const TwoMorphism u = nonSplitSquare();
        w.ring = u.src.ring();
        w.objects["source"] = u.src;
        w.objects["target"] = u.tgt;
        w.morphisms["u"] = u;
    } else {
        throw ValidationError("unknown instance kind \"" + kind + "\"");
    }
    return w;
}

void store(Workspace& w, const SnakeDiagram& D) {
    w.morphisms["f"] = D.f, w.morphisms["g"] = D.g, w.morphisms["fp"] = D.fp, w.morphisms["gp"] = D.gp;
    w.morphisms["a"] = D.a, w.morphisms["b"] = D.b, w.morphisms["c"] = D.c;
    w.cells["eta"] = D.eta, w.cells["etap"] = D.etap, w.cells["phi"] = D.phi, w.cells["psi"] = D.psi;
}

void store(Workspace& w, const ComplexExtension& E) {
    w.complexes["A"] = E.A, w.complexes["B"] = E.B, w.complexes["C"] = E.C;
    for (size_t n = 0; n < E.f.maps.size(); ++n) {
        w.morphisms[idx("f", n)] = E.f.maps[n];
        w.morphisms[idx("g", n)] = E.g.maps[n];
        w.cells[idx("omega", n)] = E.omega[n];
    }
    for (size_t n = 0; n < E.f.cells.size(); ++n) {
        w.cells[idx("fphi", n)] = E.f.cells[n];
        w.cells[idx("gphi", n)] = E.g.cells[n];
    }
}

void store(Workspace& w, const Grid3x3& G) {
    for (size_t i = 0; i < 3; ++i) {
        w.morphisms[idx("f", i + 1)] = G.f[i];
        w.morphisms[idx("g", i + 1)] = G.g[i];
        w.cells[idx("eta", i + 1)] = G.eta[i];
    }
    for (size_t i = 0; i < 2; ++i) {
        w.morphisms[idx("a", i + 1)] = G.a[i];
        w.morphisms[idx("b", i + 1)] = G.b[i];
        w.morphisms[idx("c", i + 1)] = G.c[i];
        w.cells[idx("phi", i + 1)] = G.phi[i];
        w.cells[idx("psi", i + 1)] = G.psi[i];
    }
    w.cells["alpha"] = G.alpha, w.cells["beta"] = G.beta, w.cells["gamma"] = G.gamma;
}

SnakeDiagram snakeDiagramFrom(const Workspace& w) {
    SnakeDiagram D;
    D.f = w.morphism("f"), D.g = w.morphism("g"), D.fp = w.morphism("fp"), D.gp = w.morphism("gp");
    D.a = w.morphism("a"), D.b = w.morphism("b"), D.c = w.morphism("c");
    D.eta = w.cell("eta"), D.etap = w.cell("etap"), D.phi = w.cell("phi"), D.psi = w.cell("psi");
    return D;
}

ComplexExtension complexExtensionFrom(const Workspace& w) {
    ComplexExtension E;
    E.A = w.complex("A"), E.B = w.complex("B"), E.C = w.complex("C");
    for (size_t n = 0; n < E.A.objects.size(); ++n) {
        E.f.maps.push_back(w.morphism(idx("f", n)));
        E.g.maps.push_back(w.morphism(idx("g", n)));
        E.omega.push_back(w.cell(idx("omega", n)));
    }
    for (size_t n = 0; n + 1 < E.A.objects.size(); ++n) {
        E.f.cells.push_back(w.cell(idx("fphi", n)));
        E.g.cells.push_back(w.cell(idx("gphi", n)));
    }
    return E;
}

Grid3x3 gridFrom(const Workspace& w) {
    Grid3x3 G;
    for (size_t i = 0; i < 3; ++i) {
        G.f[i] = w.morphism(idx("f", i + 1));
        G.g[i] = w.morphism(idx("g", i + 1));
        G.eta[i] = w.cell(idx("eta", i + 1));
    }
    for (size_t i = 0; i < 2; ++i) {
        G.a[i] = w.morphism(idx("a", i + 1));
        G.b[i] = w.morphism(idx("b", i + 1));
        G.c[i] = w.morphism(idx("c", i + 1));
        G.phi[i] = w.cell(idx("phi", i + 1));
        G.psi[i] = w.cell(idx("psi", i + 1));
    }
    G.alpha = w.cell("alpha"), G.beta = w.cell("beta"), G.gamma = w.cell("gamma");
    return G;
}

}  // namespace cx2
