#include "cx2/base.hpp"
#include "cx2/generate.hpp"
#include "cx2/snf.hpp"
#include "cx2/oracle.hpp"

#include <doctest.h>

using namespace cx2;

namespace {

Mat mat(std::initializer_list<std::initializer_list<int>> rows) {
    const Eigen::Index r = Eigen::Index(rows.size());
    const Eigen::Index c = r ? Eigen::Index(rows.begin()->size()) : 0;
    Mat m(r, c);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (int v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

const BaseObject Z = BaseObject::group(1, {});
const BaseObject Z2 = BaseObject::group(0, {2});

bool chainOk(const SnfDecomposition& d) {
    bool zeroSeen = false;
    const Eigen::Index n = std::min(d.D.rows(), d.D.cols());
    for (Eigen::Index i = 0; i < d.D.rows(); ++i)
        for (Eigen::Index j = 0; j < d.D.cols(); ++j)
            if (i != j && d.D(i, j) != 0) return false;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (d.D(i, i) < 0) return false;
        if (d.D(i, i) == 0) {
            zeroSeen = true;
            continue;
        }
        if (zeroSeen) return false;
        if (i && d.D(i, i) % d.D(i - 1, i - 1) != 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("snf of a 2x2 example") {
    const Mat M = mat({{2, 4}, {6, 8}});
    const auto d = snf(M);
    CHECK(d.U * M * d.V == d.D);
    CHECK(d.D == mat({{2, 0}, {0, 4}}));
    CHECK(absInt(determinant(M)) == d.D(0, 0) * d.D(1, 1));
}

TEST_CASE("snf of identity and zero") {
    const auto i = snf(eye(3));
    CHECK(i.U == eye(3));
    CHECK(i.V == eye(3));
    CHECK(i.D == eye(3));
    const auto z = snf(zeros(2, 3));
    CHECK(z.U == eye(2));
    CHECK(z.V == eye(3));
    CHECK(isZero(z.D));
    CHECK(z.rank == 0);
}

TEST_CASE("snf random matrices") {
    Rng rng(7);
    for (int t = 0; t < 300; ++t) {
        const Mat M = randomMatrix(rng, uniform(rng, 0, 5), uniform(rng, 0, 5), 9);
        const auto d = snf(M);
        REQUIRE(d.U * M * d.V == d.D);
        REQUIRE(chainOk(d));
        REQUIRE(d.U * d.Uinv == eye(M.rows()));
        REQUIRE(d.V * d.Vinv == eye(M.cols()));
        REQUIRE(absInt(determinant(d.U)) == 1);
        REQUIRE(absInt(determinant(d.V)) == 1);
        REQUIRE(snf(M).D == d.D);
    }
}

TEST_CASE("base examples over the integers") {
    const BaseMorphism two(Z, Z, mat({{2}}));
    const BaseMorphism three(Z, Z, mat({{3}}));
    const BaseMorphism four(Z, Z, mat({{4}}));
    CHECK(kernelBase(two).src.empty());
    CHECK(cokernelBase(two).tgt == Z2);
    CHECK_FALSE(solveBase(two, three).has_value());
    CHECK(*solveBase(two, four) == two);
    CHECK_FALSE(splitDataBase(two).has_value());

    const BaseMorphism q(Z, Z2, mat({{1}}));
    const BaseMorphism k = kernelBase(q);
    CHECK(k.src == Z);
    CHECK(absInt(k.m(0, 0)) == 2);

    const BaseObject Z_2 = BaseObject::group(2, {});
    const BaseMorphism d13(Z_2, Z_2, mat({{1, 0}, {0, 3}}));
    CHECK(cokernelBase(d13).tgt == BaseObject::group(0, {3}));

    const auto fl = classifyBase(two);
    CHECK(fl.mono);
    CHECK_FALSE(fl.epi);
    CHECK_FALSE(fl.splitMono);
    CHECK(classifyBase(identity(Z2)).iso);

    const BaseObject zero = BaseObject::zero(BaseRing::integers());
    const auto pb = pullbackBase(q, zeroMap(zero, Z2));
    CHECK(pb.obj == Z);
    CHECK(absInt(pb.pA.m(0, 0)) == 2);
    const auto po = pushoutBase(two, zeroMap(Z, zero));
    CHECK(po.obj == Z2);
}

TEST_CASE("invalid integer matrices are rejected") {
    CHECK_THROWS_AS(BaseMorphism(Z2, Z, mat({{1}})), ValidationError);
    const BaseObject Z4 = BaseObject::group(0, {4});
    CHECK_THROWS_AS(BaseMorphism(Z2, Z4, mat({{1}})), ValidationError);
    CHECK_NOTHROW(BaseMorphism(Z2, Z4, mat({{2}})));
    CHECK_THROWS_AS(BaseMorphism(Z, Z, mat({{1, 2}})), ValidationError);
    CHECK_THROWS_AS(BaseRing::field(4), ValidationError);
}

TEST_CASE("field examples") {
    const BaseRing F2 = BaseRing::field(2);
    const BaseObject V2 = BaseObject::vectorSpace(F2, 2), V1 = BaseObject::vectorSpace(F2, 1);
    const BaseMorphism z = zeroMap(V2, V1);
    const BaseMorphism k = kernelBase(z);
    CHECK(k.src == V2);
    CHECK(k.m == eye(2));
    const BaseRing F5 = BaseRing::field(5);
    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        const BaseObject a = randomObject(rng, F5), b = randomObject(rng, F5);
        const BaseMorphism f = randomMorphism(rng, a, b);
        const auto g = splitDataBase(f);
        REQUIRE(g.has_value());
        CHECK(f * *g * f == f);
        CHECK(*g * f * *g == *g);
        if (isEpi(f)) CHECK(classifyBase(f).splitEpi);
    }
}

TEST_CASE("kernel and cokernel against element enumeration") {
    Rng rng(11);
    Bounds b;
    b.finite = true;
    int checked = 0;
    while (checked < 150) {
        const BaseObject A = randomObject(rng, BaseRing::integers(), b);
        const BaseObject B = randomObject(rng, BaseRing::integers(), b);
        if (oracle::order(A) > 64 || oracle::order(B) > 64) continue;
        const BaseMorphism f = randomMorphism(rng, A, B);
        const BaseMorphism k = kernelBase(f);
        const BaseMorphism q = cokernelBase(f);
        REQUIRE(k.src.isCanonical());
        REQUIRE(q.tgt.isCanonical());
        REQUIRE(isZero(f * k));
        REQUIRE(isZero(q * f));
        const auto ker = oracle::kernel(f);
        REQUIRE(Int(ker.size()) == oracle::order(k.src));
        REQUIRE(oracle::injective(k));
        REQUIRE(oracle::image(k) == ker);
        REQUIRE(oracle::surjective(q));
        REQUIRE(oracle::kernel(q) == oracle::image(f));
        REQUIRE(isMono(f) == oracle::injective(f));
        REQUIRE(isEpi(f) == oracle::surjective(f));
        const auto fl = classifyBase(f);
        if (fl.splitMono) REQUIRE(*lsolveBase(f, identity(A)) * f == identity(A));
        ++checked;
    }
}

TEST_CASE("universal properties against random rivals") {
    for (BaseRing ring : {BaseRing::integers(), BaseRing::field(3)}) {
        Rng rng(5);
        for (int t = 0; t < 100; ++t) {
            const BaseObject A = randomObject(rng, ring), B = randomObject(rng, ring);
            const BaseMorphism f = randomMorphism(rng, A, B);
            const BaseMorphism k = kernelBase(f), q = cokernelBase(f);
            REQUIRE(isMono(k));
            REQUIRE(isEpi(q));
            const BaseObject X = randomObject(rng, ring);
            const BaseMorphism tk = k * randomMorphism(rng, X, k.src);
            const auto s = solveBase(k, tk);
            REQUIRE(s.has_value());
            REQUIRE(k * *s == tk);
            const BaseMorphism tq = randomMorphism(rng, q.tgt, X) * q;
            const auto l = lsolveBase(q, tq);
            REQUIRE(l.has_value());
            REQUIRE(*l * q == tq);
            const BaseObject C = randomObject(rng, ring);
            const BaseMorphism g = randomMorphism(rng, C, B);
            const auto pb = pullbackBase(f, g);
            REQUIRE(f * pb.pA == g * pb.pB);
            const auto sp = splitDataBase(f);
            if (sp) {
                REQUIRE(f * *sp * f == f);
                REQUIRE(*sp * f * *sp == *sp);
            }
            REQUIRE(isExactBase(k, f));
            REQUIRE(isExactBase(f, q));
        }
    }
}
