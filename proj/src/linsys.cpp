#include "cx2/linsys.hpp"

#include "cx2/snf.hpp"
#include "fp.hpp"

#include <boost/integer/common_factor.hpp>

namespace cx2 {

std::optional<SystemSolution> solveSystem(const Mat& C, const Vec& rhs, BaseRing ring) {
    const Eigen::Index n = C.rows(), m = C.cols();
    SystemSolution out;
    if (ring.isField()) {
        const std::int64_t p = ring.p;
        fp::Dense d = fp::Dense::from(hcat(C, Mat(rhs)), p);
        const auto piv = d.rref(m);
        for (Eigen::Index r = Eigen::Index(piv.size()); r < n; ++r)
            if (d(r, m) != 0) return std::nullopt;
        out.particular = Vec::Zero(m);
        for (size_t r = 0; r < piv.size(); ++r) out.particular(piv[r]) = d(Eigen::Index(r), m);
        out.kernel = fp::nullspace(C, p);
        return out;
    }
    const SnfDecomposition s = snf(C);
    const Vec c = s.U * rhs;
    Vec y = Vec::Zero(m);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (i < s.rank) {
            const Int di = s.D(i, i);
            if (c(i) % di != 0) return std::nullopt;
            y(i) = c(i) / di;
        } else if (c(i) != 0) {
            return std::nullopt;
        }
    }
    out.particular = s.V * y;
    out.kernel = s.V.rightCols(m - s.rank);
    return out;
}

int LinSys::unknown(const BaseObject& src, const BaseObject& tgt) {
    if (src.ring != ring_ || tgt.ring != ring_) throw ValidationError("unknown over a foreign ring");
    const Eigen::Index off = vars_.empty() ? 0 : vars_.back().offset + vars_.back().src.size() * vars_.back().tgt.size();
    vars_.push_back({src, tgt, off});
    if (ring_.isField()) return int(vars_.size() - 1);
    const Var& v = vars_.back();
    for (Eigen::Index a = 0; a < tgt.size(); ++a)
        for (Eigen::Index b = 0; b < src.size(); ++b) {
            const Int& d = src.ord[size_t(b)];
            const Int& t = tgt.ord[size_t(a)];
            if (d == 0) continue;
            const Eigen::Index idx = v.offset + a * src.size() + b;
            if (t == 0) {
                rows_.push_back({{{idx, Int(1)}}, Int(0), Int(0)});
                continue;
            }
            const Int mod = t / boost::integer::gcd(t, d);
            if (mod != 1) rows_.push_back({{{idx, Int(1)}}, mod, Int(0)});
        }
    return int(vars_.size() - 1);
}

void LinSys::equation(const std::vector<Term>& terms, const BaseMorphism& rhs) {
    const BaseObject &E0 = rhs.src, &E1 = rhs.tgt;
    std::vector<Row> rows(size_t(E1.size() * E0.size()));
    for (Eigen::Index i = 0; i < E1.size(); ++i)
        for (Eigen::Index j = 0; j < E0.size(); ++j) {
            Row& r = rows[size_t(i * E0.size() + j)];
            r.modulus = ring_.isField() ? Int(ring_.p) : E1.ord[size_t(i)];
            r.rhs = rhs.m(i, j);
        }
    for (const Term& t : terms) {
        const Var& v = vars_.at(size_t(t.var));
        const BaseObject& S = v.src;
        const BaseObject& T = v.tgt;
        const Mat L = t.left ? t.left->m : eye(T.size());
        const Mat R = t.right ? t.right->m : eye(S.size());
        const BaseObject& lt = t.left ? t.left->tgt : T;
        const BaseObject& rs = t.right ? t.right->src : S;
        if ((t.left && t.left->src != T) || (t.right && t.right->tgt != S) || lt != E1 || rs != E0)
            throw ValidationError("equation term has mismatched shape");
        for (Eigen::Index i = 0; i < E1.size(); ++i)
            for (Eigen::Index j = 0; j < E0.size(); ++j) {
                Row& r = rows[size_t(i * E0.size() + j)];
                for (Eigen::Index a = 0; a < T.size(); ++a) {
                    if (L(i, a) == 0) continue;
                    for (Eigen::Index b = 0; b < S.size(); ++b) {
                        if (R(b, j) == 0) continue;
                        Int c = L(i, a) * R(b, j);
                        if (t.negative) c = -c;
                        r.coeffs.push_back({v.offset + a * S.size() + b, c});
                    }
                }
            }
    }
    rows_.insert(rows_.end(), rows.begin(), rows.end());
}

Eigen::Index LinSys::xCount() const {
    if (vars_.empty()) return 0;
    return vars_.back().offset + vars_.back().src.size() * vars_.back().tgt.size();
}

std::optional<SystemSolution> LinSys::run() const {
    const Eigen::Index nx = xCount();
    Eigen::Index slack = 0;
    if (!ring_.isField())
        for (const Row& r : rows_) slack += r.modulus != 0;
    Mat C = zeros(Eigen::Index(rows_.size()), nx + slack);
    Vec rhs = Vec::Zero(Eigen::Index(rows_.size()));
    Eigen::Index s = nx;
    for (size_t k = 0; k < rows_.size(); ++k) {
        const Row& r = rows_[k];
        const Eigen::Index i = Eigen::Index(k);
        for (const auto& [idx, c] : r.coeffs) C(i, idx) += c;
        rhs(i) = r.rhs;
        if (!ring_.isField() && r.modulus != 0) C(i, s++) = -r.modulus;
    }
    return solveSystem(C, rhs, ring_);
}

std::vector<BaseMorphism> LinSys::unpack(const Vec& x, bool reduce) const {
    std::vector<BaseMorphism> out;
    for (const Var& v : vars_) {
        Mat m(v.tgt.size(), v.src.size());
        for (Eigen::Index a = 0; a < v.tgt.size(); ++a)
            for (Eigen::Index b = 0; b < v.src.size(); ++b) m(a, b) = x(v.offset + a * v.src.size() + b);
        if (ring_.isField())
            for (Eigen::Index a = 0; a < m.rows(); ++a)
                for (Eigen::Index b = 0; b < m.cols(); ++b) m(a, b) = floorMod(m(a, b), Int(ring_.p));
        out.push_back(reduce ? BaseMorphism(v.src, v.tgt, m) : BaseMorphism::trusted(v.src, v.tgt, m));
    }
    return out;
}

std::optional<std::vector<BaseMorphism>> LinSys::solve() const {
    const auto s = run();
    if (!s) return std::nullopt;
    return unpack(s->particular);
}

std::optional<std::vector<BaseMorphism>> LinSys::sample(Rng& rng) const {
    const auto s = run();
    if (!s) return std::nullopt;
    Vec x = s->particular;
    const std::int64_t hi = ring_.isField() ? ring_.p - 1 : 2;
    const std::int64_t lo = ring_.isField() ? 0 : -2;
    std::uniform_int_distribution<std::int64_t> coef(lo, hi);
    for (Eigen::Index k = 0; k < s->kernel.cols(); ++k) {
        const Int c = coef(rng);
        if (c != 0) x += c * s->kernel.col(k);
    }
    return unpack(x);
}

std::vector<std::vector<BaseMorphism>> LinSys::homogeneousGenerators() const {
    // Homogeneous system: same rows with zero right-hand sides.
    LinSys h = *this;
    for (Row& r : h.rows_) r.rhs = 0;
    const auto s = h.run();
    std::vector<std::vector<BaseMorphism>> gens;
    for (Eigen::Index k = 0; k < s->kernel.cols(); ++k) {
        auto g = unpack(s->kernel.col(k));
        bool zero = true;
        for (const auto& f : g) zero = zero && isZero(f);
        if (!zero) gens.push_back(std::move(g));
    }
    return gens;
}

}  // namespace cx2
