#include "cx2/diagrams.hpp"

#include <doctest.h>

using namespace cx2;

namespace {

const BaseRing F2 = BaseRing::field(2), F3 = BaseRing::field(3), F5 = BaseRing::field(5);

// Rows equal, columns identities.
SnakeDiagram identityColumns(const Extension& e) {
    SnakeDiagram D;
    D.f = D.fp = e.f;
    D.g = D.gp = e.g;
    D.eta = D.etap = e.eta;
    D.a = identity2(e.f.src);
    D.b = identity2(e.f.tgt);
    D.c = identity2(e.g.tgt);
    D.phi = identityCell(e.f);
    D.psi = identityCell(e.g);
    return D;
}

Eigen::Index dimKer(const BaseMorphism& m) { return kernelBase(m).src.size(); }
Eigen::Index dimCoker(const BaseMorphism& m) { return cokernelBase(m).tgt.size(); }

}  // namespace

TEST_CASE("snake lemma over prime fields") {
    Rng rng(21);
    for (BaseRing r : {F2, F3}) {
        for (SnakeRows kind : {SnakeRows::Biproducts, SnakeRows::Extensions, SnakeRows::Generalized}) {
            for (int i = 0; i < 15; ++i) {
                const SnakeDiagram D = randomSnakeDiagram(rng, r, kind, {.maxGens = 2});
                const SnakeResult S = snake(D, std::nullopt, {}, kind != SnakeRows::Generalized);
                for (const auto& [name, ok] : S.muIdentities) CHECK_MESSAGE(ok, name);
                for (size_t j = 0; j < S.exact.size(); ++j) CHECK_MESSAGE(S.exact[j], "point ", j);
            }
        }
    }
}

TEST_CASE("anaconda over prime fields") {
    Rng rng(22);
    for (BaseRing r : {F2, F3}) {
        for (int i = 0; i < 10; ++i) {
            const SnakeDiagram D = randomSnakeDiagram(rng, r, SnakeRows::Extensions, {.maxGens = 2});
            const AnacondaResult A = anaconda(D);
            for (size_t j = 0; j < A.exact.size(); ++j) CHECK_MESSAGE(A.exact[j], A.labels[j + 1]);
            for (size_t j = 0; j < A.loopSigns.size(); ++j) CHECK_MESSAGE(A.loopSigns[j] != 0, A.loopNames[j]);
        }
    }
}

TEST_CASE("long exact sequence of homology") {
    Rng rng(23);
    for (BaseRing r : {F2, F3}) {
        for (int len = 1; len <= 4; ++len) {
            for (int i = 0; i < 4; ++i) {
                const ComplexExtension E = randomComplexExtension(rng, r, len, {.maxGens = 2});
                const LesResult L = lesHomology(E);
                CHECK(L.sequence.objects.size() == size_t(3 * (len + 2)));
                for (size_t j = 0; j < L.exact.size(); ++j) CHECK_MESSAGE(L.exact[j], "len ", len, " point ", j);
                for (size_t j = 0; j < L.identities.size(); ++j) CHECK(L.identities[j]);
                for (size_t j = 0; j < L.homologyMatches.size(); ++j) CHECK(L.homologyMatches[j]);
                CHECK(L.pi0Exact);
                CHECK(L.omegaExact);
            }
        }
    }
}

TEST_CASE("3x3 lemma") {
    Rng rng(24);
    int kernelRows = 0;
    for (BaseRing r : {F2, F3}) {
        for (int i = 0; i < 10; ++i) {
            const Grid3x3 G = random3x3(rng, r, {.maxGens = 2});
            const Report3x3 R = check3x3(G);
            CHECK_MESSAGE(R.failure.empty(), R.failure);
            CHECK(R.holds());
            CHECK(R.firstRowExtension);
            if (!(G.a[0].src == G.a[1].tgt)) ++kernelRows;
            if (!isIso(G.f[0].src.d)) {
                const Report3x3 B = check3x3(brokenCorner(G));
                CHECK(B.failure == "column A is an extension");
            }
        }
    }
    MESSAGE("kernel rows: ", kernelRows);
}

TEST_CASE("short five lemma") {
    Rng rng(25);
    for (int i = 0; i < 10; ++i) {
        const ShortFiveReport R = checkShortFive(shortFiveEquivalences(rng, F5, {.maxGens = 2}));
        CHECK_MESSAGE(R.failure.empty(), R.failure);
        CHECK(R.a.equivalence);
        CHECK(R.c.equivalence);
        CHECK(R.b.equivalence);
        CHECK(R.holds());
    }
    for (BaseRing r : {F2, F3}) {
        for (int i = 0; i < 10; ++i) {
            const ShortFiveReport I = checkShortFive(shortFiveInclusion(rng, r, {.maxGens = 2}));
            CHECK(I.a.faithful);
            CHECK(I.c.faithful);
            CHECK(I.b.faithful);
            CHECK(I.holds());
            CHECK(I.refinedHolds());
            const ShortFiveReport P = checkShortFive(shortFiveProjection(rng, r, {.maxGens = 2}));
            CHECK(P.a.cofaithful);
            CHECK(P.b.cofaithful);
            CHECK(P.holds());
            CHECK(P.refinedHolds());
            const ShortFiveReport G = checkShortFive(randomSnakeDiagram(rng, r, SnakeRows::Extensions, {.maxGens = 2}));
            CHECK(G.holds());
            CHECK(G.refinedHolds());
        }
    }
}

TEST_CASE("relative exact windows factor into extensions") {
    Rng rng(26);
    for (BaseRing r : {F2, F3}) {
        for (int len = 2; len <= 5; ++len) {
            for (int i = 0; i < 4; ++i) {
                const ComplexSequence s = splicedRelativeExact(rng, r, len, {.maxGens = 2});
                const ComplexSequence p = s.padded();
                for (size_t j = 0; j + 2 < p.cells.size(); ++j)
                    CHECK(isCompatible(p.maps[j], p.maps[j + 1], p.maps[j + 2], p.cells[j], p.cells[j + 1]));
                for (size_t j = 1; j + 1 < p.objects.size(); ++j) {
                    const ComplexSequence w = p.padded();
                    const size_t k = j + 1;
                    CHECK(relativeExactAt(w.maps[k - 2], w.cells[k - 2], w.maps[k - 1], w.cells[k - 1], w.maps[k],
                                          w.cells[k], w.maps[k + 1]));
                }
                const RelativeDecomposition D = decomposeRelativeExact(s);
                CHECK(D.pieces.size() == size_t(len));
                CHECK(D.holds());
            }
        }
    }
}

TEST_CASE("snake and anaconda with identity columns") {
    Rng rng(27);
    for (BaseRing r : {F2, F3}) {
        for (int i = 0; i < 5; ++i) {
            const SnakeDiagram D = identityColumns(randomExtension(rng, r, {.maxGens = 2}));
            const SnakeResult S = snake(D, std::nullopt, {}, true);
            CHECK(isIso(S.d.src.d));
            CHECK(isIso(S.d.tgt.d));
            CHECK(S.allExact());
            CHECK(S.identitiesHold());
            const AnacondaResult A = anaconda(D);
            for (size_t k = 1; k + 1 < A.sequence.objects.size(); ++k) CHECK(isIso(A.sequence.objects[k].d));
            CHECK(A.allExact());
        }
    }
}

TEST_CASE("snake over discrete objects is the classical snake") {
    Rng rng(28);
    for (BaseRing r : {F2, F3, F5}) {
        for (int i = 0; i < 15; ++i) {
            const SnakeDiagram D = discreteSnake(rng, r, 3);
            const SnakeResult S = snake(D, std::nullopt, {}, true);
            CHECK(S.allExact());
            CHECK(S.identitiesHold());
            // Kernels and cokernels of the bottom linear maps, computed directly.
            const BaseMorphism* cols[3] = {&D.a.u0, &D.b.u0, &D.c.u0};
            const TwoObject* ks[3] = {&S.cols.ka.k.src, &S.cols.kb.k.src, &S.cols.kc.k.src};
            const TwoObject* qs[3] = {&S.cols.qa.q.tgt, &S.cols.qb.q.tgt, &S.cols.qc.q.tgt};
            std::vector<Eigen::Index> dims;
            for (int j = 0; j < 3; ++j) {
                CHECK(dimCoker(ks[j]->d) == dimKer(*cols[j]));
                CHECK(dimKer(ks[j]->d) == 0);
                CHECK(dimCoker(qs[j]->d) == dimCoker(*cols[j]));
                dims.push_back(dimKer(*cols[j]));
            }
            for (int j = 0; j < 3; ++j) dims.push_back(dimCoker(*cols[j]));
            // Exactness of the classical six-term sequence forces its alternating sum to vanish.
            Eigen::Index alt = 0;
            for (size_t j = 0; j < dims.size(); ++j) alt += (j % 2 ? -1 : 1) * dims[j];
            CHECK(alt == 0);
            // pi_0 of the six-term sequence is classically exact.
            const auto& m = S.sixTerm.maps;
            for (size_t j = 0; j + 1 < m.size(); ++j) {
                const BaseMorphism x = pi0Map(m[j]).u0, y = pi0Map(m[j + 1]).u0;
                CHECK(isExactBase(x, y));
            }
        }
    }
}
