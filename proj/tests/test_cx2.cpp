#include "cx2/cx2.hpp"
#include "cx2/diagrams.hpp"
#include "cx2/generate.hpp"

#include <doctest.h>

using namespace cx2;

namespace {

const BaseRing ZZ = BaseRing::integers();
const BaseObject Z = BaseObject::group(1, {});
const BaseObject Z2 = BaseObject::group(0, {2});
const BaseObject O = BaseObject::zero(ZZ);

Mat m1(int v) {
    Mat m(1, 1);
    m(0, 0) = v;
    return m;
}

TwoMorphism nonsplit() { return nonSplitSquare(); }

bool contractible(const TwoObject& x) { return isIso(x.d); }

}  // namespace

TEST_CASE("compositions and cells") {
    Rng rng(1);
    for (BaseRing r : {BaseRing::field(2), BaseRing::field(3), ZZ}) {
        for (int t = 0; t < 40; ++t) {
            const TwoMorphism u = randomSquare(rng, r);
            const TwoMorphism v = randomSquareBetween(rng, u.tgt, randomTwoObject(rng, r));
            CHECK(u * identity2(u.src) == u);
            CHECK(identity2(u.tgt) * u == u);
            CHECK(isZero2(zero2(u.tgt, v.tgt) * u));
            const TwoCell a = randomCellFrom(rng, u), a2 = randomCellFrom(rng, a.to);
            const TwoCell b = randomCellFrom(rng, v), b2 = randomCellFrom(rng, b.to);
            CHECK(vcomp2(a, identityCell(a.to)) == a);
            CHECK(vcomp2(a, inverse2(a)) == identityCell(u));
            // interchange
            CHECK(hcomp2(vcomp2(b, b2), vcomp2(a, a2)) == vcomp2(hcomp2(b, a), hcomp2(b2, a2)));
            CHECK(hcomp2(identityCell(v), a) == whiskerPost(v, a));
            CHECK(hcomp2(b, identityCell(u)) == whiskerPre(b, u));
        }
    }
}

TEST_CASE("kernel and cokernel examples") {
    const TwoMorphism u = nonsplit();
    const Kernel2 K = kernel2(u);
    CHECK(K.obj.top() == Z);
    CHECK(K.obj.bottom() == Z);
    CHECK(contractible(K.obj));

    const TwoObject f(BaseMorphism(Z, Z, m1(3)));
    CHECK(contractible(kernel2(identity2(f)).obj));
    CHECK(contractible(cokernel2(identity2(f)).obj));

    const TwoObject d = TwoObject::discrete(Z);
    const Kernel2 K0 = kernel2(zero2(d, d));
    CHECK(K0.obj == d);

    const TwoMorphism two(d, d, identity(O), BaseMorphism(Z, Z, m1(2)));
    const Cokernel2 Q = cokernel2(two);
    CHECK(Q.obj.top() == Z);
    CHECK(Q.obj.bottom() == Z);
    CHECK(absInt(Q.obj.d.m(0, 0)) == 2);
}

TEST_CASE("loop and suspension") {
    const TwoObject f(BaseMorphism(Z, Z, m1(2)));
    const LoopSuspension s = loopSuspension(f);
    CHECK(s.pi0 == TwoObject::discrete(Z2));
    CHECK(s.pi1 == TwoObject::zero(ZZ));
    Rng rng(4);
    for (BaseRing r : {BaseRing::field(5), ZZ}) {
        for (int t = 0; t < 40; ++t) {
            const TwoObject x = randomTwoObject(rng, r);
            const LoopSuspension l = loopSuspension(x);
            const LoopSuspension ls = loopSuspension(l.sigma);
            const LoopSuspension lo = loopSuspension(l.omega);
            CHECK(ls.omega == l.pi0);
            CHECK(ls.omegaLoop.a * l.eta.u0 == l.sigmaLoop.a);
            CHECK(lo.sigma == l.pi1);
            CHECK(l.eps.u1 * lo.sigmaLoop.a == l.omegaLoop.a);
        }
    }
    const TwoObject v = TwoObject::connected(BaseObject::vectorSpace(BaseRing::field(2), 2));
    const LoopSuspension c = loopSuspension(v);
    CHECK(c.sigma == TwoObject::zero(BaseRing::field(2)));
    CHECK(c.pi1 == v);
    CHECK(c.omega == TwoObject::discrete(v.top()));
}

TEST_CASE("pip and copip examples") {
    const BaseRing F2 = BaseRing::field(2);
    const BaseObject V = BaseObject::vectorSpace(F2, 1);
    const TwoObject c = TwoObject::connected(V), d = TwoObject::discrete(V);
    CHECK(pip2(zero2(c, c)).obj == d);
    CHECK(copip2(zero2(d, d)).obj == c);
    CHECK(pip2(identity2(c)).obj.bottom().empty());
    CHECK(copip2(identity2(d)).obj.top().empty());
}

TEST_CASE("the non-split square over the integers") {
    const TwoMorphism u = nonsplit();
    const ArrowClassification c = classify2(u);
    CHECK(c.faithful);
    CHECK(c.full);
    CHECK(c.fullyFaithful);
    CHECK(c.cofaithful);
    CHECK(c.fullyCofaithful);
    CHECK_FALSE(c.equivalence);
    CHECK_FALSE(equivalenceData2(u).has_value());
    const Factorization2 F = factor2(u);
    const ArrowClassification lc = classify2(F.l);
    CHECK(lc.faithful);
    CHECK(lc.cofaithful);
    CHECK_FALSE(lc.equivalence);

    const TwoMorphism w = nonSplitContrast();
    CHECK(classify2(w).equivalence);
    CHECK(equivalenceData2(w).has_value());
}

TEST_CASE("classification is consistent and equivalences invert") {
    Rng rng(9);
    for (BaseRing r : {BaseRing::field(2), BaseRing::field(3), ZZ}) {
        for (int t = 0; t < 60; ++t) {
            const TwoMorphism u = randomSquare(rng, r);
            const ArrowClassification c = classify2(u);
            if (c.fullyFaithful) CHECK(c.faithful);
            if (c.equivalence) {
                CHECK(c.fullyFaithful);
                CHECK(c.fullyCofaithful);
                const auto e = equivalenceData2(u);
                REQUIRE(e.has_value());
                for (const auto& [name, ok] : equivalenceEquations(u, *e)) CHECK_MESSAGE(ok, name);
            } else {
                CHECK_FALSE(equivalenceData2(u).has_value());
            }
            if (r.isField() && c.fullyFaithful && c.cofaithful) CHECK(c.equivalence);
            const TwoMorphism eq = randomEquivalence(rng, u.src);
            CHECK(classify2(eq).equivalence);
        }
    }
}

TEST_CASE("factorization recomposes with the right flags") {
    Rng rng(12);
    for (BaseRing r : {BaseRing::field(2), BaseRing::field(5), ZZ}) {
        for (int t = 0; t < 40; ++t) {
            const TwoMorphism u = randomSquare(rng, r);
            const Factorization2 F = factor2(u);
            CHECK(F.mhat * F.l * F.e == u);
            CHECK(F.mbar * F.ehat == u);
            CHECK(F.mprime * F.e == u);
            CHECK(classify2(F.e).fullyCofaithful);
            CHECK(classify2(F.mhat).fullyFaithful);
            const auto lc = classify2(F.l);
            CHECK(lc.faithful);
            CHECK(lc.cofaithful);
            if (r.isField()) {
                CHECK(classify2(comparison(u)).equivalence);
                CHECK(classify2(comparisonBar(u)).equivalence);
            }
        }
    }
}

TEST_CASE("orthogonality") {
    Rng rng(21);
    for (BaseRing r : {BaseRing::field(2), BaseRing::field(3)}) {
        for (int t = 0; t < 25; ++t) {
            const TwoMorphism u = randomSquare(rng, r), v = randomSquare(rng, r);
            const Factorization2 F = factor2(u), G = factor2(v);
            CHECK(orthogonal2(F.e, G.mhat).holds);
            CHECK(orthogonal2(randomEquivalence(rng, u.src), v).holds);
        }
    }
}

TEST_CASE("matrix calculus") {
    Rng rng(2);
    const BaseRing F3 = BaseRing::field(3);
    for (int t = 0; t < 30; ++t) {
        std::vector<TwoObject> A, B, C;
        for (int i = 0; i < 2; ++i) {
            A.push_back(randomTwoObject(rng, F3));
            B.push_back(randomTwoObject(rng, F3));
            C.push_back(randomTwoObject(rng, F3));
        }
        Grid2 f(2), g(2), gf(2);
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                f[j].push_back(randomSquareBetween(rng, A[k], B[j]));
                g[j].push_back(randomSquareBetween(rng, B[k], C[j]));
            }
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) gf[j].push_back(g[j][0] * f[0][k] + g[j][1] * f[1][k]);
        const TwoMorphism F = matrixAssemble2(f, A, B, F3), G = matrixAssemble2(g, B, C, F3);
        CHECK(G * F == matrixAssemble2(gf, A, C, F3));
        CHECK(matrixOf2(F, A, B) == f);
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) CHECK(projection2(B, j) * F * injection2(A, k) == f[j][k]);
        Grid2 id(2);
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) id[j].push_back(j == k ? identity2(A[j]) : zero2(A[k], A[j]));
        CHECK(classify2(matrixAssemble2(id, A, A, F3)).equivalence);
    }
    CHECK(matrixAssemble2({}, {}, {}, F3) == identity2(TwoObject::zero(F3)));
}
