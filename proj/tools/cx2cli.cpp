#include "cx2/instances.hpp"
#include "cx2/report.hpp"
#include "cx2/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#ifndef CX2_DATA_DIR
#define CX2_DATA_DIR "data"
#endif

using namespace cx2;

namespace {

struct Options {
    std::string in, out, ring, morphism = "u", cell = "loop", complex = "s", kind = "square", suite;
    std::string data = CX2_DATA_DIR;
    std::uint64_t seed = 0;
    int cases = 0, at = 1, maxGens = 3;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Outcome {
    Json report;
    int code = 0;
};

BaseRing ringOption(const std::string& text) {
    try {
        return parseRing(text);
    } catch (const FormatError& e) {
        throw UsageError(e.what());
    }
}

Workspace input(const Options& o, const std::string& kind) {
    if (!o.in.empty()) {
        Workspace w = loadWorkspace(o.in);
        if (!o.ring.empty() && !(ringOption(o.ring) == w.ring))
            throw UsageError("--ring " + o.ring + " differs from the workspace ring " + ringFlag(w.ring));
        return w;
    }
    return genInstance(o.seed, kind, ringOption(o.ring.empty() ? "fp:2" : o.ring), {.maxGens = o.maxGens});
}

Json header(const std::string& command, const Options& o, const Workspace& w) {
    Json j;
    j["command"] = command;
    j["ring"] = ringFlag(w.ring);
    if (o.in.empty())
        j["seed"] = o.seed;
    else
        j["in"] = o.in;
    return j;
}

// Window position of degree n in a sequence padded k times.
size_t position(const ComplexSequence& s, int n, int k) {
    if (n < s.lo || n > s.hi()) throw UsageError("--at " + std::to_string(n) + " is outside the window");
    return size_t(n - s.lo + k);
}

using Handler = std::function<Outcome(const Options&, const std::string&)>;

Outcome onSquare(const Options& o, const std::string& cmd) {
    const Workspace w = input(o, "square");
    const TwoMorphism& u = w.morphism(o.morphism);
    Json j = header(cmd, o, w);
    j["morphism"] = o.morphism;
    if (cmd == "kernel") {
        const Kernel2 K = kernel2(u);
        j["object"] = toJson(K.obj), j["k"] = toJson(K.k), j["kappa"] = toJson(K.kappa);
    } else if (cmd == "cokernel") {
        const Cokernel2 Q = cokernel2(u);
        j["object"] = toJson(Q.obj), j["q"] = toJson(Q.q), j["zeta"] = toJson(Q.zeta);
    } else if (cmd == "pip") {
        const Pip2 P = pip2(u);
        j["object"] = toJson(P.obj), j["loop"] = toJson(P.loop);
    } else if (cmd == "copip") {
        const Copip2 P = copip2(u);
        j["object"] = toJson(P.obj), j["loop"] = toJson(P.loop);
    } else if (cmd == "classify") {
        j["classification"] = toJson(classify2(u));
    } else if (cmd == "equivdata") {
        const auto e = equivalenceData2(u);
        j["exists"] = e.has_value();
        j["data"] = e ? toJson(*e) : Json(nullptr);
        if (e) {
            Json eq = Json::object();
            for (const auto& [name, ok] : equivalenceEquations(u, *e)) eq[name] = ok;
            j["equations"] = eq;
        }
    } else if (cmd == "factor") {
        const Factorization2 F = factor2(u);
        j["e"] = toJson(F.e), j["l"] = toJson(F.l), j["mhat"] = toJson(F.mhat);
        j["recomposes"] = F.mhat * F.l * F.e == u;
        j["eFullyCofaithful"] = classify2(F.e).fullyCofaithful;
        const ArrowClassification lc = classify2(F.l);
        j["lFaithfulCofaithful"] = lc.faithful && lc.cofaithful;
        j["mhatFullyFaithful"] = classify2(F.mhat).fullyFaithful;
    } else if (cmd == "puppe") {
        j["puppe"] = toJson(puppe(u));
    }
    return {j, 0};
}

Outcome onLoop(const Options& o, const std::string& cmd) {
    const Workspace w = input(o, "loop");
    const TwoCell& loop = w.cell(o.cell);
    Json j = header(cmd, o, w);
    j["cell"] = o.cell;
    if (cmd == "root") {
        const Root2 R = root2(loop);
        j["object"] = toJson(R.obj), j["r"] = toJson(R.r);
    } else {
        const Coroot2 R = coroot2(loop);
        j["object"] = toJson(R.obj), j["r"] = toJson(R.r);
    }
    return {j, 0};
}

Outcome onComplex(const Options& o, const std::string& cmd) {
    const Workspace w = input(o, "complex");
    const ComplexSequence& s = w.complex(o.complex);
    Json j = header(cmd, o, w);
    j["complex"] = o.complex;
    j["at"] = o.at;
    if (cmd == "exactat") {
        const ComplexSequence p = s.padded();
        const size_t i = position(s, o.at, 1);
        j["exactness"] = toJson(exactnessAt(p.maps[i - 1], p.cells[i - 1], p.maps[i]));
        return {j, 0};
    }
    const ComplexSequence p = s.padded().padded();
    const size_t k = position(s, o.at, 2);
    if (cmd == "relexactat") {
        j["relativeExact"] = relativeExactAt(p.maps[k - 2], p.cells[k - 2], p.maps[k - 1], p.cells[k - 1], p.maps[k],
                                             p.cells[k], p.maps[k + 1]);
    } else {
        const HomologyResult H = homologyAt(p.maps[k - 2], p.cells[k - 2], p.maps[k - 1], p.cells[k - 1], p.maps[k],
                                            p.cells[k], p.maps[k + 1]);
        j["H"] = toJson(H.H);
        j["contractible"] = isIso(H.H.d);
        j["routesEquivalent"] = H.comparisonEquivalence;
    }
    return {j, 0};
}

Outcome onDiagram(const Options& o, const std::string& cmd) {
    const Workspace w = input(o, "lemmaDiagram");
    const SnakeDiagram D = snakeDiagramFrom(w);
    Json j = header(cmd, o, w);
    if (cmd == "shortfive") {
        const ShortFiveReport R = checkShortFive(D);
        j["shortFive"] = toJson(R);
        return {j, R.failure.empty() ? 0 : 1};
    }
    const bool ext = isExtension(D.f, D.eta, D.g) && isExtension(D.fp, D.etap, D.gp);
    j["rows"] = ext ? "extensions" : "generalized";
    const std::string fail = snakeHypothesisFailure(D, canonicalColumns(D), ext);
    if (!fail.empty()) throw HypothesisError(fail);
    if (cmd == "snake")
        j["snake"] = toJson(snake(D, std::nullopt, {}, ext));
    else
        j["anaconda"] = toJson(anaconda(D));
    return {j, 0};
}

Outcome onLes(const Options& o, const std::string& cmd) {
    const Workspace w = input(o, "complexExtension");
    Json j = header(cmd, o, w);
    j["les"] = toJson(lesHomology(complexExtensionFrom(w)));
    return {j, 0};
}

Outcome on3x3(const Options& o, const std::string& cmd) {
    const Workspace w = input(o, "grid3x3");
    Json j = header(cmd, o, w);
    const Report3x3 R = check3x3(gridFrom(w));
    j["check3x3"] = toJson(R);
    return {j, R.failure.empty() ? 0 : 1};
}

Outcome onDemo(const Options&, const std::string& cmd) {
    Json j;
    j["command"] = cmd;
    j["demo"] = demoNonSplit();
    return {j, 0};
}

Outcome onSelftest(const Options& o, const std::string& cmd) {
    SuiteOptions so;
    so.seed = o.seed;
    so.cases = o.cases;
    so.dataDir = o.data;
    Json j;
    j["command"] = cmd;
    j["seed"] = o.seed;
    j["cases"] = o.cases;
    j["suites"] = Json::array();
    bool ok = true, found = false;
    for (const Suite& s : suites()) {
        if (!o.suite.empty() && o.suite != s.name) continue;
        found = true;
        const SuiteResult r = runSuite(s, so);
        ok = ok && r.passed();
        j["suites"].push_back(toJson(r));
        std::cerr << (r.passed() ? "PASS " : "FAIL ") << s.name << " (" << r.cases << " cases, " << r.seconds
                  << " s)\n";
    }
    if (!found) throw UsageError("unknown suite \"" + o.suite + "\"");
    j["passed"] = ok;
    return {j, ok ? 0 : 1};
}

Outcome onGenerate(const Options& o, const std::string& cmd) {
    if (!o.in.empty()) throw UsageError("generate takes no --in");
    (void)cmd;
    return {Json::parse(serializeWorkspace(input(o, o.kind))), 0};
}

void emit(const Options& o, const Json& report) {
    const std::string text = dumpPretty(report);
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw ValidationError("cannot write " + o.out);
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Computations with two-dimensional abelian categories of arrows"};
    app.require_subcommand(1);
    Options o;

    const std::vector<std::tuple<std::string, std::string, Handler>> commands = {
        {"kernel", "kernel of a square", onSquare},
        {"cokernel", "cokernel of a square", onSquare},
        {"pip", "pip of a square", onSquare},
        {"copip", "copip of a square", onSquare},
        {"root", "root of a loop cell", onLoop},
        {"coroot", "coroot of a loop cell", onLoop},
        {"classify", "faithfulness and fullness flags of a square", onSquare},
        {"equivdata", "inverse equivalence data of a square, when it exists", onSquare},
        {"factor", "factorization e, l, mhat of a square", onSquare},
        {"exactat", "exactness of a complex at a degree", onComplex},
        {"relexactat", "relative exactness of a complex at a degree", onComplex},
        {"homology", "homology object of a complex at a degree", onComplex},
        {"puppe", "eleven-term sequence of a square", onSquare},
        {"snake", "six-term sequence of a lemma diagram", onDiagram},
        {"anaconda", "twelve-term sequence of a lemma diagram", onDiagram},
        {"les", "long exact homology sequence of a degreewise extension of complexes", onLes},
        {"check3x3", "3x3 lemma on a grid", on3x3},
        {"shortfive", "short five lemma on a lemma diagram", onDiagram},
        {"demo-nonsplit", "the square over the integers that is not an equivalence", onDemo},
        {"selftest", "run the property suites", onSelftest},
        {"generate", "write a random workspace instance", onGenerate},
    };
    std::map<std::string, Handler> handlers;
    for (const auto& [name, help, h] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        handlers[name] = h;
        sub->add_option("--in", o.in, "workspace file")->check(CLI::ExistingFile);
        sub->add_option("--out", o.out, "report file (default: standard output)");
        sub->add_option("--seed", o.seed, "seed for generated instances");
        sub->add_option("--cases", o.cases, "cases per suite (selftest)")->check(CLI::NonNegativeNumber);
        sub->add_option("--ring", o.ring, "fp:<p> or Z");
        sub->add_option("--morphism", o.morphism, "morphism name");
        sub->add_option("--cell", o.cell, "cell name");
        sub->add_option("--complex", o.complex, "complex name");
        sub->add_option("--at", o.at, "degree");
        sub->add_option("--kind", o.kind, "instance kind (generate)")->check(CLI::IsMember(instanceKinds()));
        sub->add_option("--max-gens", o.maxGens, "generators per base object")->check(CLI::Range(0, 6));
        sub->add_option("--suite", o.suite, "run one suite (selftest)");
        sub->add_option("--data", o.data, "directory holding nonsplit.json (selftest)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        const Outcome r = handlers.at(cmd)(o, cmd);
        emit(o, r.report);
        return r.code;
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        Json j;
        j["command"] = cmd;
        j["error"] = e.what();
        try {
            emit(o, j);
        } catch (const std::exception&) {
        }
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
