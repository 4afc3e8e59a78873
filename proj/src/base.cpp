#include "cx2/base.hpp"

#include "cx2/linsys.hpp"
#include "cx2/snf.hpp"
#include "fp.hpp"

#include <sstream>

namespace cx2 {

namespace {

bool isPrime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void requireSameRing(const BaseRing& a, const BaseRing& b) {
    if (a != b) throw ValidationError("ring mismatch: " + a.name() + " vs " + b.name());
}

std::vector<Eigen::Index> range(Eigen::Index lo, Eigen::Index hi) {
    std::vector<Eigen::Index> r;
    for (Eigen::Index i = lo; i < hi; ++i) r.push_back(i);
    return r;
}

}  // namespace

BaseRing BaseRing::field(std::int64_t p) {
    if (p >= (std::int64_t(1) << 31) || !isPrime(p))
        throw ValidationError("field characteristic must be a prime below 2^31: " + std::to_string(p));
    return {p};
}

std::string BaseRing::name() const { return isField() ? "F" + std::to_string(p) : "Z"; }

BaseObject BaseObject::vectorSpace(BaseRing r, int dim) {
    if (!r.isField()) throw ValidationError("vectorSpace needs a prime field");
    if (dim < 0) throw ValidationError("negative dimension");
    return {r, std::vector<Int>(size_t(dim), Int(r.p))};
}

BaseObject BaseObject::group(std::vector<Int> orders) {
    for (const auto& o : orders)
        if (o < 0 || o == 1) throw ValidationError("generator order must be 0 or at least 2");
    return {BaseRing::integers(), std::move(orders)};
}

BaseObject BaseObject::group(int freeRank, std::vector<Int> torsion) {
    if (freeRank < 0) throw ValidationError("negative free rank");
    for (size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i] < 2) throw ValidationError("torsion coefficients must exceed 1");
        if (i && torsion[i] % torsion[i - 1] != 0)
            throw ValidationError("torsion coefficients must form a divisibility chain");
    }
    for (int i = 0; i < freeRank; ++i) torsion.push_back(0);
    return {BaseRing::integers(), std::move(torsion)};
}

bool BaseObject::isCanonical() const {
    if (ring.isField()) return true;
    bool seenFree = false;
    for (size_t i = 0; i < ord.size(); ++i) {
        if (ord[i] == 0) {
            seenFree = true;
            continue;
        }
        if (seenFree) return false;
        if (i && ord[i] % ord[i - 1] != 0) return false;
    }
    return true;
}

int BaseObject::freeRank() const {
    int r = 0;
    for (const auto& o : ord) r += o == 0;
    return r;
}

std::vector<Int> BaseObject::torsion() const {
    std::vector<Int> t;
    for (const auto& o : ord)
        if (o != 0) t.push_back(o);
    return t;
}

std::string BaseObject::describe() const {
    if (ring.isField()) return ring.name() + "^" + std::to_string(ord.size());
    if (ord.empty()) return "0";
    std::ostringstream s;
    for (size_t i = 0; i < ord.size(); ++i) {
        if (i) s << " + ";
        if (ord[i] == 0)
            s << "Z";
        else
            s << "Z/" << ord[i];
    }
    return s.str();
}

void validateMatrix(const BaseObject& s, const BaseObject& t, const Mat& m) {
    requireSameRing(s.ring, t.ring);
    if (m.rows() != t.size() || m.cols() != s.size()) {
        std::ostringstream e;
        e << "matrix shape " << m.rows() << "x" << m.cols() << " does not match " << t.size() << "x"
          << s.size();
        throw ValidationError(e.str());
    }
    if (s.ring.isField()) return;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const Int& d = s.ord[size_t(j)];
            const Int& e = t.ord[size_t(i)];
            if (d == 0) continue;
            if (e == 0 ? m(i, j) != 0 : (d * m(i, j)) % e != 0) {
                std::ostringstream msg;
                msg << "entry (" << i << "," << j << ") = " << m(i, j) << " is not well defined from order "
                    << d << " to order " << e;
                throw ValidationError(msg.str());
            }
        }
}

Mat reduceRows(const BaseObject& t, Mat m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        const Int& e = t.ord[size_t(i)];
        if (e == 0) continue;
        for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = floorMod(m(i, j), e);
    }
    return m;
}

BaseMorphism::BaseMorphism(BaseObject s, BaseObject t, Mat entries)
    : src(std::move(s)), tgt(std::move(t)) {
    validateMatrix(src, tgt, entries);
    m = reduceRows(tgt, std::move(entries));
}

BaseMorphism BaseMorphism::trusted(BaseObject s, BaseObject t, Mat entries) {
    BaseMorphism f;
    f.src = std::move(s);
    f.tgt = std::move(t);
    f.m = reduceRows(f.tgt, std::move(entries));
    return f;
}

bool BaseMorphism::operator==(const BaseMorphism& o) const {
    return src == o.src && tgt == o.tgt && m == o.m;
}

BaseMorphism identity(const BaseObject& a) { return BaseMorphism::trusted(a, a, eye(a.size())); }

BaseMorphism zeroMap(const BaseObject& a, const BaseObject& b) {
    requireSameRing(a.ring, b.ring);
    return BaseMorphism::trusted(a, b, zeros(b.size(), a.size()));
}

bool isZero(const BaseMorphism& f) { return isZero(f.m); }

BaseMorphism operator*(const BaseMorphism& g, const BaseMorphism& f) {
    if (f.tgt != g.src)
        throw ValidationError("composition mismatch: " + f.tgt.describe() + " vs " + g.src.describe());
    return BaseMorphism::trusted(f.src, g.tgt, g.m * f.m);
}

BaseMorphism operator+(const BaseMorphism& a, const BaseMorphism& b) {
    if (a.src != b.src || a.tgt != b.tgt) throw ValidationError("sum of non-parallel morphisms");
    return BaseMorphism::trusted(a.src, a.tgt, a.m + b.m);
}

BaseMorphism operator-(const BaseMorphism& a, const BaseMorphism& b) {
    if (a.src != b.src || a.tgt != b.tgt) throw ValidationError("difference of non-parallel morphisms");
    return BaseMorphism::trusted(a.src, a.tgt, a.m - b.m);
}

BaseMorphism operator-(const BaseMorphism& a) { return BaseMorphism::trusted(a.src, a.tgt, -a.m); }

BaseObject directSum(const BaseObject& a, const BaseObject& b) {
    requireSameRing(a.ring, b.ring);
    BaseObject s = a;
    s.ord.insert(s.ord.end(), b.ord.begin(), b.ord.end());
    return s;
}

BaseObject directSum(const std::vector<BaseObject>& parts) {
    if (parts.empty()) throw ValidationError("empty direct sum needs a ring");
    BaseObject s = BaseObject::zero(parts.front().ring);
    for (const auto& p : parts) s = directSum(s, p);
    return s;
}

BaseMorphism copair(const BaseMorphism& f, const BaseMorphism& g) {
    if (f.tgt != g.tgt) throw ValidationError("copair needs a common target");
    return BaseMorphism::trusted(directSum(f.src, g.src), f.tgt, hcat(f.m, g.m));
}

BaseMorphism pair(const BaseMorphism& f, const BaseMorphism& g) {
    if (f.src != g.src) throw ValidationError("pair needs a common source");
    return BaseMorphism::trusted(f.src, directSum(f.tgt, g.tgt), vcat(f.m, g.m));
}

BaseMorphism blockDiag(const BaseMorphism& f, const BaseMorphism& g) {
    return BaseMorphism::trusted(directSum(f.src, g.src), directSum(f.tgt, g.tgt), blockDiag(f.m, g.m));
}

BaseMorphism injection(const BaseObject& a, const BaseObject& b, int which) {
    const BaseObject s = directSum(a, b);
    Mat m = zeros(s.size(), which == 1 ? a.size() : b.size());
    const Eigen::Index off = which == 1 ? 0 : a.size();
    for (Eigen::Index i = 0; i < m.cols(); ++i) m(off + i, i) = 1;
    return BaseMorphism::trusted(which == 1 ? a : b, s, m);
}

BaseMorphism projection(const BaseObject& a, const BaseObject& b, int which) {
    const BaseObject s = directSum(a, b);
    Mat m = zeros(which == 1 ? a.size() : b.size(), s.size());
    const Eigen::Index off = which == 1 ? 0 : a.size();
    for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, off + i) = 1;
    return BaseMorphism::trusted(s, which == 1 ? a : b, m);
}

BiproductBase biproductBase(const BaseObject& a, const BaseObject& b) {
    return {directSum(a, b), injection(a, b, 1), injection(a, b, 2), projection(a, b, 1),
            projection(a, b, 2)};
}

Presentation presentQuotient(const Mat& R) {
    const Eigen::Index n = R.rows();
    const SnfDecomposition d = snf(R);
    std::vector<Eigen::Index> kept;
    std::vector<Int> orders;
    for (Eigen::Index i = 0; i < n; ++i) {
        const Int di = d.diag(i);
        if (di == 1) continue;
        kept.push_back(i);
        orders.push_back(di);
    }
    Presentation p;
    p.obj = BaseObject::group(std::move(orders));
    p.toCanon = selectRows(d.U, kept);
    p.fromCanon = selectCols(d.Uinv, kept);
    return p;
}

BaseMorphism kernelBase(const BaseMorphism& f) {
    const BaseObject& A = f.src;
    const BaseRing r = A.ring;
    if (r.isField()) {
        const Mat n = fp::nullspace(f.m, r.p);
        return BaseMorphism::trusted(BaseObject::vectorSpace(r, int(n.cols())), A, n);
    }
    const Eigen::Index s = A.size(), t = f.tgt.size();
    const Mat N = hcat(f.m, -diagonal(f.tgt.ord));
    const SnfDecomposition dn = snf(N);
    const Mat G = selectRows(selectCols(dn.V, range(dn.rank, s + t)), range(0, s));
    const SnfDecomposition dg = snf(G);
    const Eigen::Index rk = dg.rank;
    std::vector<Int> dv;
    for (Eigen::Index i = 0; i < rk; ++i) dv.push_back(dg.diag(i));
    const Mat Bm = selectCols(dg.Uinv, range(0, rk)) * diagonal(dv);
    Mat R = selectRows(dg.U * diagonal(A.ord), range(0, rk));
    for (Eigen::Index i = 0; i < rk; ++i)
        for (Eigen::Index j = 0; j < R.cols(); ++j) R(i, j) /= dv[size_t(i)];
    const Presentation p = presentQuotient(R);
    return BaseMorphism::trusted(p.obj, A, Bm * p.fromCanon);
}

BaseMorphism cokernelBase(const BaseMorphism& f) {
    const BaseObject& B = f.tgt;
    const BaseRing r = B.ring;
    if (r.isField()) {
        const Mat n = fp::nullspace(f.m.transpose(), r.p);
        return BaseMorphism::trusted(B, BaseObject::vectorSpace(r, int(n.cols())), n.transpose());
    }
    const Presentation p = presentQuotient(hcat(f.m, diagonal(B.ord)));
    return BaseMorphism::trusted(B, p.obj, p.toCanon);
}

PullbackBase pullbackBase(const BaseMorphism& f, const BaseMorphism& g) {
    const BaseMorphism k = kernelBase(copair(f, -g));
    return {k.src, projection(f.src, g.src, 1) * k, projection(f.src, g.src, 2) * k};
}

PushoutBase pushoutBase(const BaseMorphism& f, const BaseMorphism& g) {
    const BaseMorphism q = cokernelBase(pair(f, -g));
    return {q.tgt, q * injection(f.tgt, g.tgt, 1), q * injection(f.tgt, g.tgt, 2)};
}

namespace {

// Column j of X with a X = b over Z: a c - diag(z) w = b_j, y_j c - diag(x) v = 0.
std::optional<Mat> solveIntegers(const BaseMorphism& a, const BaseMorphism& b) {
    const BaseObject &X = a.src, &Z = a.tgt, &Y = b.src;
    const Eigen::Index nx = X.size(), nz = Z.size(), ny = Y.size();
    Mat sol = zeros(nx, ny);
    for (Eigen::Index j = 0; j < ny; ++j) {
        const Int& yj = Y.ord[size_t(j)];
        Mat C = zeros(nz + nx, nx + nz + nx);
        if (nz) {
            C.block(0, 0, nz, nx) = a.m;
            C.block(0, nx, nz, nz) = -diagonal(Z.ord);
        }
        for (Eigen::Index i = 0; i < nx; ++i) {
            C(nz + i, i) = yj;
            C(nz + i, nx + nz + i) = -X.ord[size_t(i)];
        }
        Vec rhs = Vec::Zero(nz + nx);
        for (Eigen::Index i = 0; i < nz; ++i) rhs(i) = b.m(i, j);
        const auto s = solveSystem(C, rhs, BaseRing::integers());
        if (!s) return std::nullopt;
        for (Eigen::Index i = 0; i < nx; ++i) sol(i, j) = s->particular(i);
    }
    return sol;
}

std::optional<Mat> solveField(const Mat& A, const Mat& B, std::int64_t p) {
    fp::Dense d = fp::Dense::from(hcat(A, B), p);
    const auto piv = d.rref(A.cols());
    for (Eigen::Index r = Eigen::Index(piv.size()); r < d.rows; ++r)
        for (Eigen::Index j = A.cols(); j < d.cols; ++j)
            if (d(r, j) != 0) return std::nullopt;
    Mat X = zeros(A.cols(), B.cols());
    for (size_t r = 0; r < piv.size(); ++r)
        for (Eigen::Index j = 0; j < B.cols(); ++j) X(piv[r], j) = d(Eigen::Index(r), A.cols() + j);
    return X;
}

}  // namespace

std::optional<BaseMorphism> solveBase(const BaseMorphism& a, const BaseMorphism& b) {
    if (a.tgt != b.tgt) throw ValidationError("solveBase needs a common target");
    std::optional<Mat> x = a.src.ring.isField() ? solveField(a.m, b.m, a.src.ring.p) : solveIntegers(a, b);
    if (!x) return std::nullopt;
    return BaseMorphism::trusted(b.src, a.src, *x);
}

std::optional<BaseMorphism> lsolveBase(const BaseMorphism& a, const BaseMorphism& b) {
    if (a.src != b.src) throw ValidationError("lsolveBase needs a common source");
    const BaseRing r = a.src.ring;
    if (r.isField()) {
        auto x = solveField(a.m.transpose(), b.m.transpose(), r.p);
        if (!x) return std::nullopt;
        return BaseMorphism::trusted(a.tgt, b.tgt, x->transpose());
    }
    // Row i of X over Z: a^T x - z_i w = b_i^T, diag(q) x - z_i v = 0.
    const BaseObject &P = a.src, &Q = a.tgt, &R = b.tgt;
    const Eigen::Index np = P.size(), nq = Q.size(), nr = R.size();
    Mat sol = zeros(nr, nq);
    for (Eigen::Index i = 0; i < nr; ++i) {
        const Int& zi = R.ord[size_t(i)];
        Mat C = zeros(np + nq, nq + np + nq);
        if (np) {
            C.block(0, 0, np, nq) = a.m.transpose();
            for (Eigen::Index k = 0; k < np; ++k) C(k, nq + k) = -zi;
        }
        for (Eigen::Index k = 0; k < nq; ++k) {
            C(np + k, k) = Q.ord[size_t(k)];
            C(np + k, nq + np + k) = -zi;
        }
        Vec rhs = Vec::Zero(np + nq);
        for (Eigen::Index k = 0; k < np; ++k) rhs(k) = b.m(i, k);
        const auto s = solveSystem(C, rhs, r);
        if (!s) return std::nullopt;
        for (Eigen::Index k = 0; k < nq; ++k) sol(i, k) = s->particular(k);
    }
    return BaseMorphism::trusted(Q, R, sol);
}

std::optional<BaseMorphism> splitDataBase(const BaseMorphism& f) {
    LinSys sys(f.src.ring);
    const int x = sys.unknown(f.tgt, f.src);
    sys.equation({{.var = x, .left = f, .right = f}}, f);
    const auto s = sys.solve();
    if (!s) return std::nullopt;
    const BaseMorphism& X = s->front();
    return X * f * X;
}

BaseFlags classifyBase(const BaseMorphism& f) {
    BaseFlags fl;
    fl.mono = kernelBase(f).src.empty();
    fl.epi = cokernelBase(f).tgt.empty();
    fl.iso = fl.mono && fl.epi;
    fl.zero = isZero(f);
    fl.splitMono = fl.mono && lsolveBase(f, identity(f.src)).has_value();
    fl.splitEpi = fl.epi && solveBase(f, identity(f.tgt)).has_value();
    return fl;
}

bool isMono(const BaseMorphism& f) { return kernelBase(f).src.empty(); }
bool isEpi(const BaseMorphism& f) { return cokernelBase(f).tgt.empty(); }
bool isIso(const BaseMorphism& f) { return isMono(f) && isEpi(f); }

bool isExactBase(const BaseMorphism& m, const BaseMorphism& e) {
    if (!isZero(e * m)) return false;
    return isZero(cokernelBase(m) * kernelBase(e));
}

}  // namespace cx2
