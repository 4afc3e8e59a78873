#include "cx2/suites.hpp"

#include "cx2/diagrams.hpp"
#include "cx2/oracle.hpp"
#include "cx2/report.hpp"
#include "cx2/snf.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

namespace cx2 {

namespace {

const BaseRing F2 = BaseRing::field(2), F3 = BaseRing::field(3), F5 = BaseRing::field(5);
const BaseRing ZZ = BaseRing::integers();

// Collects failures and hit counts for one suite.
class Tally {
public:
    explicit Tally(SuiteResult& r) : r_(r) {}

    void check(bool ok, const std::string& what) {
        if (ok) return;
        if (!failed_) ++r_.failures;
        failed_ = true;
        if (r_.firstFailure.empty()) r_.firstFailure = "case " + std::to_string(r_.cases) + ": " + what;
    }

    void count(const std::string& key, bool hit = true) {
        if (!hit) return;
        for (auto& [k, v] : r_.counts)
            if (k == key) {
                ++v;
                return;
            }
        r_.counts.emplace_back(key, 1);
    }

    // Runs one case; exceptions count as failures.
    template <class F>
    void run(F&& body) {
        failed_ = false;
        try {
            body();
        } catch (const std::exception& e) {
            check(false, std::string("exception: ") + e.what());
        }
        ++r_.cases;
    }

private:
    SuiteResult& r_;
    bool failed_ = false;
};

Rng suiteRng(const SuiteOptions& o, int salt) {
    std::seed_seq seq{std::uint32_t(o.seed), std::uint32_t(o.seed >> 32), std::uint32_t(salt)};
    return Rng(seq);
}

int caseCount(const SuiteOptions& o, int fallback) { return o.cases > 0 ? o.cases : fallback; }

BaseMorphism zeroBetween(const BaseObject& a, const BaseObject& b) { return zeroMap(a, b); }

// Squares a: X -> A with a cell alpha: u a => 0, and with y alpha = phi a when phi is given.
class KernelRivals {
public:
    KernelRivals(const TwoObject& X, const TwoMorphism& u, const TwoMorphism* y = nullptr, const TwoCell* phi = nullptr)
        : X_(X), u_(u), sys_(X.ring()) {
        const TwoObject &A = u.src, &B = u.tgt;
        a1_ = sys_.unknown(X.top(), A.top());
        a0_ = sys_.unknown(X.bottom(), A.bottom());
        c_ = sys_.unknown(X.bottom(), B.top());
        sys_.equation({{a1_, A.d, {}, false}, {a0_, {}, X.d, true}}, zeroBetween(X.top(), A.bottom()));
        sys_.equation({{a1_, u.u1, {}, false}, {c_, {}, X.d, true}}, zeroBetween(X.top(), B.top()));
        sys_.equation({{a0_, u.u0, {}, false}, {c_, B.d, {}, true}}, zeroBetween(X.bottom(), B.bottom()));
        if (y && phi)
            sys_.equation({{c_, y->u1, {}, false}, {a0_, phi->a, {}, true}}, zeroBetween(X.bottom(), y->tgt.top()));
    }

    std::pair<TwoMorphism, TwoCell> sample(Rng& rng) const {
        const auto s = sys_.sample(rng);
        if (!s) throw ValidationError("kernel rivals: system has no solution");
        const TwoMorphism a(X_, u_.src, (*s)[size_t(a1_)], (*s)[size_t(a0_)]);
        return {a, TwoCell(u_ * a, zero2(X_, u_.tgt), (*s)[size_t(c_)])};
    }

private:
    TwoObject X_;
    TwoMorphism u_;
    LinSys sys_;
    int a1_ = 0, a0_ = 0, c_ = 0;
};

// Squares b: B -> Y with a cell beta: b u => 0.
class CokernelRivals {
public:
    CokernelRivals(const TwoMorphism& u, const TwoObject& Y) : u_(u), Y_(Y), sys_(Y.ring()) {
        const TwoObject &A = u.src, &B = u.tgt;
        b1_ = sys_.unknown(B.top(), Y.top());
        b0_ = sys_.unknown(B.bottom(), Y.bottom());
        c_ = sys_.unknown(A.bottom(), Y.top());
        sys_.equation({{b1_, Y.d, {}, false}, {b0_, {}, B.d, true}}, zeroBetween(B.top(), Y.bottom()));
        sys_.equation({{b1_, {}, u.u1, false}, {c_, {}, A.d, true}}, zeroBetween(A.top(), Y.top()));
        sys_.equation({{b0_, {}, u.u0, false}, {c_, Y.d, {}, true}}, zeroBetween(A.bottom(), Y.bottom()));
    }

    std::pair<TwoMorphism, TwoCell> sample(Rng& rng) const {
        const auto s = sys_.sample(rng);
        if (!s) throw ValidationError("cokernel rivals: system has no solution");
        const TwoMorphism b(u_.tgt, Y_, (*s)[size_t(b1_)], (*s)[size_t(b0_)]);
        return {b, TwoCell(b * u_, zero2(u_.src, Y_), (*s)[size_t(c_)])};
    }

private:
    TwoMorphism u_;
    TwoObject Y_;
    LinSys sys_;
    int b1_ = 0, b0_ = 0, c_ = 0;
};

// Squares a: X -> f with loop a = 0, or b: g -> Y with b loop = 0.
TwoMorphism rootRival(Rng& rng, const TwoObject& X, const TwoCell& loop) {
    const TwoObject& f = loop.from.src;
    LinSys sys(f.ring());
    const int a1 = sys.unknown(X.top(), f.top()), a0 = sys.unknown(X.bottom(), f.bottom());
    sys.equation({{a1, f.d, {}, false}, {a0, {}, X.d, true}}, zeroBetween(X.top(), f.bottom()));
    sys.equation({{a0, loop.a, {}, false}}, zeroBetween(X.bottom(), loop.a.tgt));
    const auto s = *sys.sample(rng);
    return TwoMorphism(X, f, s[0], s[1]);
}

TwoMorphism corootRival(Rng& rng, const TwoCell& loop, const TwoObject& Y) {
    const TwoObject& g = loop.from.tgt;
    LinSys sys(g.ring());
    const int b1 = sys.unknown(g.top(), Y.top()), b0 = sys.unknown(g.bottom(), Y.bottom());
    sys.equation({{b1, Y.d, {}, false}, {b0, {}, g.d, true}}, zeroBetween(g.top(), Y.bottom()));
    sys.equation({{b1, {}, loop.a, false}}, zeroBetween(loop.a.src, Y.top()));
    const auto s = *sys.sample(rng);
    return TwoMorphism(g, Y, s[0], s[1]);
}

bool chainOk(const SnfDecomposition& d) {
    for (Eigen::Index i = 0; i < d.D.rows(); ++i)
        for (Eigen::Index j = 0; j < d.D.cols(); ++j)
            if (i != j && d.D(i, j) != 0) return false;
    bool zeroSeen = false;
    const Eigen::Index n = std::min(d.D.rows(), d.D.cols());
    for (Eigen::Index i = 0; i < n; ++i) {
        const Int& x = d.D(i, i);
        if (x < 0 || (zeroSeen && x != 0)) return false;
        if (x == 0) {
            zeroSeen = true;
            continue;
        }
        if (i && x % d.D(i - 1, i - 1) != 0) return false;
    }
    return true;
}

Bounds boundsFor(BaseRing r) { return r.isField() ? Bounds{} : Bounds{.maxGens = 2}; }

SuiteResult snfSuite(const SuiteOptions& o) {
    SuiteResult r;
    Tally t(r);
    Rng rng = suiteRng(o, 1);
    for (int i = 0, n = caseCount(o, 500); i < n; ++i)
        t.run([&] {
            const Mat M = randomMatrix(rng, uniform(rng, 0, 5), uniform(rng, 0, 5), 9);
            const SnfDecomposition d = snf(M);
            t.check(d.U * M * d.V == d.D, "U M V = D");
            t.check(chainOk(d), "divisibility chain");
            t.check(absInt(determinant(d.U)) == 1, "|det U| = 1");
            t.check(absInt(determinant(d.V)) == 1, "|det V| = 1");
            t.check(d.U * d.Uinv == eye(M.rows()) && d.V * d.Vinv == eye(M.cols()), "inverses");
            t.count("nonzero rank", d.rank > 0);
        });
    return r;
}

SuiteResult universalSuite(const SuiteOptions& o) {
    SuiteResult r;
    Tally t(r);
    Rng rng = suiteRng(o, 2);
    const int rivals = 20;
    for (BaseRing ring : {F2, F3, F5, ZZ}) {
        const Bounds b = boundsFor(ring);
        for (int i = 0, n = caseCount(o, 200); i < n; ++i)
            t.run([&] {
                const TwoMorphism u = randomSquare(rng, ring, b);
                // kernel2
                const Kernel2 K = kernel2(u);
                const bool kUnique = isMono(K.k.u1) && isMono(pair(K.k.u0, K.kappa.a));
                t.check(kUnique, "kernel2 factorizations unique");
                const KernelRivals kr(randomTwoObject(rng, ring, b), u);
                for (int j = 0; j < rivals; ++j) {
                    const auto [a, alpha] = kr.sample(rng);
                    const TwoMorphism f = kernelFactor(K, a, alpha);
                    t.check(K.k * f == a && whiskerPre(K.kappa, f) == alpha, "kernel2 factorization");
                    t.count("kernel2 nonzero rivals", !isZero2(a));
                }
                // cokernel2
                const Cokernel2 Q = cokernel2(u);
                t.check(isEpi(Q.q.u0) && isEpi(copair(Q.q.u1, Q.zeta.a)), "cokernel2 factorizations unique");
                const CokernelRivals cr(u, randomTwoObject(rng, ring, b));
                for (int j = 0; j < rivals; ++j) {
                    const auto [bb, beta] = cr.sample(rng);
                    const TwoMorphism g = cokernelFactor(Q, bb, beta);
                    t.check(g * Q.q == bb && whiskerPost(g, Q.zeta) == beta, "cokernel2 factorization");
                    t.count("cokernel2 nonzero rivals", !isZero2(bb));
                }
                // root2 and coroot2 of a loop between the ends of u
                const TwoCell loop = randomLoop(rng, u.src, u.tgt);
                const Root2 R = root2(loop);
                t.check(isZero(loop.a * R.r.u0), "root2 kills the loop");
                t.check(isMono(R.r.u1) && isMono(R.r.u0), "root2 factorizations unique");
                const TwoObject X = randomTwoObject(rng, ring, b);
                for (int j = 0; j < rivals; ++j) {
                    const TwoMorphism a = rootRival(rng, X, loop);
                    t.check(R.r * rootFactor(R, a) == a, "root2 factorization");
                }
                const Coroot2 C = coroot2(loop);
                t.check(isZero(C.r.u1 * loop.a), "coroot2 kills the loop");
                t.check(isEpi(C.r.u1) && isEpi(C.r.u0), "coroot2 factorizations unique");
                const TwoObject Y = randomTwoObject(rng, ring, b);
                for (int j = 0; j < rivals; ++j) {
                    const TwoMorphism bb = corootRival(rng, loop, Y);
                    t.check(corootFactor(C, bb) * C.r == bb, "coroot2 factorization");
                }
                t.count("nonzero loops", !isZero(loop.a));
                // relKernel2 against a cell y u => 0
                const auto [y, phi] = cr.sample(rng);
                const RelKernel2 RK = relKernel2(u, y, phi);
                t.check(isCompatible(RK.k, u, y, RK.kappa, phi), "relKernel2 compatible");
                t.check(isMono(RK.k.u1) && isMono(pair(RK.k.u0, RK.kappa.a)), "relKernel2 factorizations unique");
                const KernelRivals rr(randomTwoObject(rng, ring, b), u, &y, &phi);
                for (int j = 0; j < rivals; ++j) {
                    const auto [a, alpha] = rr.sample(rng);
                    t.check(isCompatible(a, u, y, alpha, phi), "relKernel2 rival compatible");
                    const TwoMorphism f = relKernelFactor(RK, a, alpha);
                    t.check(RK.k * f == a && whiskerPre(RK.kappa, f) == alpha, "relKernel2 factorization");
                }
            });
    }
    return r;
}

SuiteResult twoAbelianSuite(const SuiteOptions& o) {
    SuiteResult r;
    Tally t(r);
    Rng rng = suiteRng(o, 3);
    for (BaseRing ring : {F2, F3, F5}) {
        for (int i = 0, n = caseCount(o, 200); i < n; ++i)
            t.run([&] {
                const TwoMorphism u = randomSquare(rng, ring);
                const TwoMorphism wbar = comparisonBar(u), w = comparison(u);
                t.check(classify2(wbar).equivalence, "comparison Coker Ker -> Root Copip is an equivalence");
                t.check(classify2(w).equivalence, "comparison Coroot Pip -> Ker Coker is an equivalence");
                for (const TwoMorphism& v : {u, randomEquivalence(rng, u.src), factor2(u).l, w, wbar}) {
                    const ArrowClassification c = classify2(v);
                    const bool hyp = (c.faithful && c.fullyCofaithful) || (c.fullyFaithful && c.cofaithful);
                    if (!hyp) continue;
                    t.count("hypothesis met");
                    const auto e = equivalenceData2(v);
                    t.check(e.has_value(), "equivalence data exists");
                    if (e)
                        for (const auto& [name, ok] : equivalenceEquations(v, *e)) t.check(ok, name);
                }
            });
    }
    return r;
}

SuiteResult nonSplitSuite(const SuiteOptions& o) {
    SuiteResult r;
    Tally t(r);
    t.run([&] {
        const TwoMorphism u = nonSplitSquare();
        const ArrowClassification c = classify2(u);
        t.check(c.faithful && c.full && c.fullyFaithful, "faithful, full, fully faithful");
        t.check(c.cofaithful && c.fullyCofaithful, "cofaithful, fully cofaithful");
        t.check(!c.equivalence, "not an equivalence");
        t.check(!equivalenceData2(u).has_value(), "no equivalence data");
        const TwoMorphism w = nonSplitContrast();
        t.check(classify2(w).equivalence && equivalenceData2(w).has_value(), "contrast square is an equivalence");

        const Json demo = demoNonSplit();
        const Json& ns = demo["nonsplit"];
        for (const char* k : {"faithful", "full", "fullyFaithful", "cofaithful", "fullyCofaithful"})
            t.check(ns["classification"][k] == true, std::string("demo reports ") + k);
        t.check(ns["classification"]["equivalence"] == false, "demo reports equivalence=false");
        t.check(ns["equivalenceData"].is_null(), "demo reports no equivalence data");
        t.check(ns["splitWitness"]["leftMapRetraction"] == false, "demo reports the missing retraction");
        t.check(demo["contrast"]["classification"]["equivalence"] == true, "demo contrast equivalence=true");
        t.check(ns["square"] == toJson(u), "demo square");

        const std::string path = o.dataDir + "/nonsplit.json";
        std::ifstream in(path);
        t.check(bool(in), "cannot read " + path);
        if (!in) return;
        std::stringstream ss;
        ss << in.rdbuf();
        const Workspace ws = parseWorkspace(ss.str());
        t.check(ws.morphism("u") == u, "shipped square matches");
        t.check(serializeWorkspace(ws) == ss.str(), "shipped file round-trips byte for byte");
    });
    return r;
}

SuiteResult puppeSuite(const SuiteOptions& o) {
    SuiteResult r;
    Tally t(r);
    Rng rng = suiteRng(o, 5);
    for (BaseRing ring : {F2, F3, F5, ZZ}) {
        for (int i = 0, n = caseCount(o, 100); i < n; ++i)
            t.run([&] {
                const PuppeResult p = puppe(randomSquare(rng, ring, boundsFor(ring)));
                t.check(p.sequence.objects.size() == 12, "eleven terms between zeros");
                for (size_t j = 0; j < p.exact.size(); ++j) t.check(p.exact[j], "exact at " + p.labels[j + 1]);
                t.check(p.identities.size() == 7, "seven identities");
                for (const auto& [name, ok] : p.identities) t.check(ok, name);
                t.check(p.muExact.agree, "loop exactness routes agree");
                if (ring.isField()) t.check(p.muExact.sequence, "mu is an exact loop");
                t.count("mu exact", p.muExact.sequence);
            });
    }
    return r;
}

SuiteResult lemmaSuite(const SuiteOptions& o) {
    SuiteResult r;
    Tally t(r);
    Rng rng = suiteRng(o, 6);
    const Bounds b{.maxGens = 2};
    const int n = caseCount(o, 100);
    const auto ringOf = [](int i) { return i % 2 ? F3 : F2; };
    for (int i = 0; i < n; ++i)
        t.run([&] {
            const SnakeResult S = snake(randomSnakeDiagram(rng, ringOf(i), SnakeRows::Generalized, b));
            for (const auto& [name, ok] : S.muIdentities) t.check(ok, "snake: " + name);
            for (size_t j = 0; j < S.exact.size(); ++j) t.check(S.exact[j], "snake exact at " + std::to_string(j));
            t.count("snake with nonzero d", !isZero2(S.d));
        });
    for (int i = 0; i < n; ++i)
        t.run([&] {
            const Grid3x3 G = random3x3(rng, ringOf(i), b);
            const Report3x3 R = check3x3(G);
            t.check(R.failure.empty(), "3x3 hypothesis: " + R.failure);
            t.check(R.holds(), "3x3: first row relative exact");
            t.check(R.firstRowExtension, "3x3: first row an extension");
            t.count("3x3 broken corner rejected",
                    !isIso(G.f[0].src.d) && check3x3(brokenCorner(G)).failure == "column A is an extension");
        });
    for (int i = 0; i < n; ++i)
        t.run([&] {
            const ShortFiveReport R = checkShortFive(shortFiveEquivalences(rng, i % 3 == 2 ? F5 : ringOf(i), b));
            t.check(R.failure.empty(), "short five hypothesis: " + R.failure);
            t.check(R.a.equivalence && R.c.equivalence, "short five: flanks are equivalences");
            t.check(R.b.equivalence, "short five: middle is an equivalence");
            t.check(R.holds(), "short five");
        });
    for (int i = 0; i < n; ++i)
        t.run([&] {
            const BaseRing ring = ringOf(i);
            const SnakeDiagram D = i % 3 == 0   ? shortFiveInclusion(rng, ring, b)
                                   : i % 3 == 1 ? shortFiveProjection(rng, ring, b)
                                                : randomSnakeDiagram(rng, ring, SnakeRows::Extensions, b);
            const ShortFiveReport R = checkShortFive(D);
            t.check(R.failure.empty(), "refined short five hypothesis: " + R.failure);
            t.check(R.holds(), "refined short five: plain");
            t.check(R.refinedHolds(), "refined short five");
            t.count("refined: b faithful", R.b.faithful);
            t.count("refined: b cofaithful", R.b.cofaithful);
        });
    for (int i = 0; i < n; ++i)
        t.run([&] {
            const AnacondaResult A = anaconda(randomSnakeDiagram(rng, ringOf(i), SnakeRows::Extensions, b));
            for (size_t j = 0; j < A.exact.size(); ++j) t.check(A.exact[j], "anaconda exact at " + A.labels[j + 1]);
            for (size_t j = 0; j < A.loopSigns.size(); ++j) t.check(A.loopSigns[j] != 0, "anaconda: " + A.loopNames[j]);
        });
    return r;
}

SuiteResult lesSuite(const SuiteOptions& o) {
    SuiteResult r;
    Tally t(r);
    Rng rng = suiteRng(o, 7);
    for (BaseRing ring : {F2, F3}) {
        for (int i = 0, n = caseCount(o, 50); i < n; ++i)
            t.run([&] {
                const int len = 1 + i % 4;
                const LesResult L = lesHomology(randomComplexExtension(rng, ring, len, {.maxGens = 2}));
                t.check(L.sequence.objects.size() == size_t(3 * (len + 2)), "sequence length");
                for (size_t j = 0; j < L.exact.size(); ++j) t.check(L.exact[j], "exact at " + std::to_string(j));
                for (size_t j = 0; j < L.identities.size(); ++j)
                    t.check(L.identities[j], "snake identity " + std::to_string(j));
                for (size_t j = 0; j < L.homologyMatches.size(); ++j)
                    t.check(L.homologyMatches[j], "homology object " + std::to_string(j));
                t.check(L.pi0Exact, "pi_0 shadow exact");
                t.check(L.omegaExact, "Omega shadow exact");
                bool connecting = false;
                for (const auto& S : L.snakes) connecting = connecting || !isZero2(S.d);
                t.count("nonzero connecting map", connecting);
            });
    }
    return r;
}

SuiteResult matrixSuite(const SuiteOptions& o) {
    SuiteResult r;
    Tally t(r);
    Rng rng = suiteRng(o, 8);
    for (int i = 0, n = caseCount(o, 200); i < n; ++i)
        t.run([&] {
            std::vector<TwoObject> A, B, C;
            for (int k = 0; k < 2; ++k) {
                A.push_back(randomTwoObject(rng, F3));
                B.push_back(randomTwoObject(rng, F3));
                C.push_back(randomTwoObject(rng, F3));
            }
            Grid2 f(2), g(2), gf(2), id(2);
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) {
                    f[j].push_back(randomSquareBetween(rng, A[k], B[j]));
                    g[j].push_back(randomSquareBetween(rng, B[k], C[j]));
                }
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) {
                    gf[j].push_back(g[j][0] * f[0][k] + g[j][1] * f[1][k]);
                    id[j].push_back(j == k ? identity2(A[j]) : zero2(A[k], A[j]));
                }
            const TwoMorphism F = matrixAssemble2(f, A, B, F3), G = matrixAssemble2(g, B, C, F3);
            t.check(G * F == matrixAssemble2(gf, A, C, F3), "composite is the product assembly");
            t.check(matrixOf2(F, A, B) == f, "matrixOf2 inverts assembly");
            for (size_t j = 0; j < 2; ++j)
                for (size_t k = 0; k < 2; ++k)
                    t.check(projection2(B, j) * F * injection2(A, k) == f[j][k], "entries recovered");
            const TwoMorphism I = matrixAssemble2(id, A, A, F3);
            t.check(classify2(I).equivalence, "identity grid is an equivalence");
            t.check(I == identity2(directSum2(A, F3)), "identity grid is the identity");
        });
    return r;
}

bool smallSquare(const TwoMorphism& u) {
    for (const BaseObject* a : {&u.src.top(), &u.src.bottom(), &u.tgt.top(), &u.tgt.bottom()})
        if (!oracle::finite(*a) || oracle::order(*a) > 64) return false;
    return true;
}

SuiteResult classificationSuite(const SuiteOptions& o) {
    SuiteResult r;
    Tally t(r);
    Rng rng = suiteRng(o, 9);
    for (BaseRing ring : {F2, F3, F5, ZZ}) {
        const Bounds b{.maxGens = ring.p == 5 ? 2 : 3, .finite = true};
        for (int i = 0, n = caseCount(o, 500); i < n; ++i)
            t.run([&] {
                TwoMorphism u = randomSquare(rng, ring, b);
                while (!smallSquare(u)) u = randomSquare(rng, ring, b);
                const oracle::Square s{u.src.d, u.u1, u.u0, u.tgt.d};
                const ArrowClassification c = classify2(u);
                t.check(c.faithful == oracle::jointlyInjective(s.f, s.u1), "faithful against joint injectivity");
                t.check(c.full == oracle::matchingFromTop(s), "full against matching pairs");
                t.check(c.fullyFaithful == oracle::isPullback(s), "fully faithful against the pullback property");
                t.check(c.cofaithful == oracle::jointlySurjective(s), "cofaithful against joint surjectivity");
                t.check(c.fullyCofaithful == oracle::isPushout(s), "fully cofaithful against the pushout property");
                t.check(c.discreteSource == oracle::injective(u.src.d), "discrete source");
                t.check(c.connectedSource == oracle::surjective(u.src.d), "connected source");
                t.count("faithful", c.faithful);
                t.count("fully faithful", c.fullyFaithful);
                t.count("cofaithful", c.cofaithful);
                t.count("fully cofaithful", c.fullyCofaithful);
                t.count("equivalence", c.equivalence);
            });
    }
    return r;
}

SuiteResult regularitySuite(const SuiteOptions& o) {
    SuiteResult r;
    Tally t(r);
    Rng rng = suiteRng(o, 10);
    for (BaseRing ring : {F2, F3, F5}) {
        for (int i = 0, n = caseCount(o, 200); i < n; ++i)
            t.run([&] {
                // A cofaithful square, sampled or a cokernel.
                TwoMorphism u = randomSquare(rng, ring);
                if (!classify2(u).cofaithful) u = cokernel2(u).q;
                const TwoMorphism v = randomSquareBetween(rng, randomTwoObject(rng, ring), u.tgt);
                const Biproduct2 S = biproduct2(u.src, v.src);
                const Kernel2 K = kernel2(u * S.p1 - v * S.p2);
                const TwoMorphism pulled = S.p2 * K.k;
                t.check(classify2(u).cofaithful, "square is cofaithful");
                t.check(classify2(pulled).cofaithful, "pullback is cofaithful");

                const TwoMorphism w = randomSquare(rng, ring);
                const Kernel2 Kw = kernel2(w);
                const BaseMorphism p0u = pi0Map(w).u0, p0k = pi0Map(Kw.k).u0;
                t.check(isZero(p0u * p0k), "pi_0 kills the kernel");
                const auto into = solveBase(kernelBase(p0u), p0k);
                t.check(into.has_value() && isEpi(*into), "pi_0 Ker -> Ker pi_0 is epi");
                const Cokernel2 Qw = cokernel2(w);
                const BaseMorphism p1u = pi1Map(w).u1, p1q = pi1Map(Qw.q).u1;
                t.check(isZero(p1q * p1u), "pi_1 kills the cokernel");
                const auto out = lsolveBase(cokernelBase(p1u), p1q);
                t.check(out.has_value() && isMono(*out), "Coker pi_1 -> pi_1 Coker is mono");
                t.count("nonzero pi_0 Ker", !p0k.src.empty());
                t.count("nonzero pi_1 Coker", !p1q.tgt.empty());
            });
    }
    return r;
}

SuiteResult baseSuite(const SuiteOptions& o) {
    SuiteResult r;
    Tally t(r);
    Rng rng = suiteRng(o, 11);
    const Bounds fin{.finite = true};
    for (int i = 0, n = caseCount(o, 200); i < n; ++i)
        t.run([&] {
            BaseObject A = randomObject(rng, ZZ, fin), B = randomObject(rng, ZZ, fin);
            while (oracle::order(A) > 64 || oracle::order(B) > 64) {
                A = randomObject(rng, ZZ, fin);
                B = randomObject(rng, ZZ, fin);
            }
            const BaseMorphism f = randomMorphism(rng, A, B);
            const BaseMorphism k = kernelBase(f), q = cokernelBase(f);
            t.check(oracle::injective(k) && oracle::image(k) == oracle::kernel(f), "kernel by enumeration");
            t.check(oracle::surjective(q) && oracle::kernel(q) == oracle::image(f), "cokernel by enumeration");
            t.check(isMono(f) == (k.src.empty()) && isEpi(f) == (q.tgt.empty()), "mono and epi flags");
        });
    for (BaseRing ring : {F3, ZZ}) {
        for (int i = 0, n = caseCount(o, 100); i < n; ++i)
            t.run([&] {
                const BaseObject A = randomObject(rng, ring), B = randomObject(rng, ring), C = randomObject(rng, ring);
                const BaseMorphism f = randomMorphism(rng, A, C), g = randomMorphism(rng, B, C);
                const PullbackBase P = pullbackBase(f, g);
                t.check(f * P.pA == g * P.pB, "pullback square commutes");
                const BaseMorphism legs = pair(P.pA, P.pB);
                t.check(isMono(legs), "pullback legs jointly mono");
                const BaseObject X = randomObject(rng, ring);
                LinSys sys(ring);
                const int x = sys.unknown(X, A), y = sys.unknown(X, B);
                sys.equation({{x, f, {}, false}, {y, g, {}, true}}, zeroMap(X, C));
                for (int j = 0; j < 100; ++j) {
                    const auto s = *sys.sample(rng);
                    const auto h = solveBase(legs, pair(s[0], s[1]));
                    t.check(h.has_value() && P.pA * *h == s[0] && P.pB * *h == s[1], "pullback factorization");
                }
                const auto sp = splitDataBase(f);
                if (ring.isField()) t.check(sp.has_value(), "split data over a field");
                if (sp) t.check(f * *sp * f == f && *sp * f * *sp == *sp, "split data equations");
                const BaseFlags fl = classifyBase(f);
                t.check(!fl.iso || (fl.mono && fl.epi), "iso implies mono and epi");
                t.check(fl.splitMono == lsolveBase(f, identity(A)).has_value(), "split mono");
            });
    }
    return r;
}

SuiteResult cellSuite(const SuiteOptions& o) {
    SuiteResult r;
    Tally t(r);
    Rng rng = suiteRng(o, 12);
    for (BaseRing ring : {F2, F3, ZZ}) {
        const Bounds b = boundsFor(ring);
        for (int i = 0, n = caseCount(o, 200); i < n; ++i)
            t.run([&] {
                const TwoMorphism u = randomSquare(rng, ring, b);
                const TwoMorphism v = randomSquareBetween(rng, u.tgt, randomTwoObject(rng, ring, b));
                const TwoCell a = randomCellFrom(rng, u), a2 = randomCellFrom(rng, a.to);
                const TwoCell c = randomCellFrom(rng, v), c2 = randomCellFrom(rng, c.to);
                // hcomp2 throws when its two formulas disagree.
                t.check(hcomp2(vcomp2(c, c2), vcomp2(a, a2)) == vcomp2(hcomp2(c, a), hcomp2(c2, a2)), "interchange");
                const TwoObject& x = u.src;
                const LoopSuspension l = loopSuspension(x);
                const LoopSuspension ls = loopSuspension(l.sigma), lo = loopSuspension(l.omega);
                t.check(ls.omegaLoop.a * l.eta.u0 == l.sigmaLoop.a, "omega_Sigma eta = sigma");
                t.check(l.eps.u1 * lo.sigmaLoop.a == l.omegaLoop.a, "eps sigma_Omega = omega");
                const ArrowClassification cl = classify2(u);
                t.check(cl.discreteSource == isMono(x.d), "discrete source is a mono boundary");
                t.check(cl.connectedSource == isEpi(x.d), "connected source is an epi boundary");
            });
    }
    return r;
}

SuiteResult exactnessSuite(const SuiteOptions& o) {
    SuiteResult r;
    Tally t(r);
    Rng rng = suiteRng(o, 13);
    const Bounds b{.maxGens = 2};
    for (BaseRing ring : {F2, F3, ZZ}) {
        for (int i = 0, n = caseCount(o, 100); i < n; ++i)
            t.run([&] {
                const ComplexSequence s = randomComplex(rng, ring, 3, b);
                const ExactnessReport e = exactnessAt(s.maps[0], s.cells[0], s.maps[1]);
                t.check(e.routesAgree, "kernel and cokernel routes agree");
                t.count("exact", e.exact);
                const TwoCell loop = randomLoop(rng, randomTwoObject(rng, ring, b), randomTwoObject(rng, ring, b));
                t.check(loopExactness(loop).agree, "loop exactness routes agree");
                if (!ring.isField()) return;
                const Extension x = randomExtension(rng, ring, b);
                t.check(isExtension(x.f, x.eta, x.g), "generated extension");
                for (bool ok : relativeExactPadded(x.f, x.eta, x.g)) t.check(ok, "extension relative exact");
                const RelativeDecomposition D = decomposeRelativeExact(splicedRelativeExact(rng, ring, 2 + i % 3, b));
                t.check(D.holds(), "relative exact window factors into extensions");
            });
    }
    return r;
}

}  // namespace

const std::vector<Suite>& suites() {
    static const std::vector<Suite> all = {
        {1, "snf", snfSuite},
        {2, "universal-properties", universalSuite},
        {3, "two-abelian", twoAbelianSuite},
        {4, "non-split", nonSplitSuite},
        {5, "puppe", puppeSuite},
        {6, "diagram-lemmas", lemmaSuite},
        {7, "long-exact-sequence", lesSuite},
        {8, "matrix-calculus", matrixSuite},
        {9, "classification", classificationSuite},
        {10, "regularity-goodness", regularitySuite},
        {0, "base-limits", baseSuite},
        {0, "cells-loops", cellSuite},
        {0, "exactness", exactnessSuite},
    };
    return all;
}

SuiteResult runSuite(const Suite& s, const SuiteOptions& o) {
    const auto start = std::chrono::steady_clock::now();
    SuiteResult r = s.run(o);
    r.criterion = s.criterion;
    r.name = s.name;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<SuiteResult> runSuites(const SuiteOptions& o) {
    std::vector<SuiteResult> out;
    for (const Suite& s : suites()) out.push_back(runSuite(s, o));
    return out;
}

Json toJson(const SuiteResult& r) {
    Json j;
    j["criterion"] = r.criterion;
    j["name"] = r.name;
    j["passed"] = r.passed();
    j["cases"] = r.cases;
    j["failures"] = r.failures;
    j["firstFailure"] = r.firstFailure;
    Json c = Json::object();
    for (const auto& [k, v] : r.counts) c[k] = v;
    j["counts"] = c;
    return j;
}

}  // namespace cx2
