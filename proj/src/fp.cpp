#include "fp.hpp"

#include <utility>

namespace cx2::fp {

std::int64_t inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        t = std::exchange(nt, t - q * nt);
        r = std::exchange(nr, r - q * nr);
    }
    return t < 0 ? t + p : t;
}

Dense::Dense(Eigen::Index r, Eigen::Index c, std::int64_t p_)
    : rows(r), cols(c), p(p_), a(size_t(r * c), 0) {}

Dense Dense::from(const Mat& m, std::int64_t p) {
    Dense d(m.rows(), m.cols(), p);
    const Int P = p;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            d(i, j) = floorMod(m(i, j), P).convert_to<std::int64_t>();
    return d;
}

Mat Dense::toMat() const {
    Mat m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = (*this)(i, j);
    return m;
}

std::vector<Eigen::Index> Dense::rref(Eigen::Index limit) {
    if (limit < 0) limit = cols;
    std::vector<Eigen::Index> piv;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < limit && r < rows; ++c) {
        Eigen::Index s = r;
        while (s < rows && (*this)(s, c) == 0) ++s;
        if (s == rows) continue;
        if (s != r)
            for (Eigen::Index j = 0; j < cols; ++j) std::swap((*this)(s, j), (*this)(r, j));
        const std::int64_t inv = inverse((*this)(r, c), p);
        for (Eigen::Index j = 0; j < cols; ++j) (*this)(r, j) = (*this)(r, j) * inv % p;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r) continue;
            const std::int64_t f = (*this)(i, c);
            if (f == 0) continue;
            for (Eigen::Index j = 0; j < cols; ++j) {
                std::int64_t v = ((*this)(i, j) - f * (*this)(r, j)) % p;
                (*this)(i, j) = v < 0 ? v + p : v;
            }
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

Mat nullspace(const Mat& m, std::int64_t p) {
    Dense d = Dense::from(m, p);
    const auto piv = d.rref();
    std::vector<char> isPivot(size_t(m.cols()), 0);
    for (auto c : piv) isPivot[size_t(c)] = 1;
    std::vector<Eigen::Index> freeCols;
    for (Eigen::Index c = 0; c < m.cols(); ++c)
        if (!isPivot[size_t(c)]) freeCols.push_back(c);
    Mat n = zeros(m.cols(), Eigen::Index(freeCols.size()));
    for (size_t k = 0; k < freeCols.size(); ++k) {
        const Eigen::Index fc = freeCols[k];
        n(fc, Eigen::Index(k)) = 1;
        for (size_t r = 0; r < piv.size(); ++r) {
            const std::int64_t v = d(Eigen::Index(r), fc);
            if (v) n(piv[r], Eigen::Index(k)) = (p - v) % p;
        }
    }
    return n;
}

Eigen::Index rank(const Mat& m, std::int64_t p) {
    Dense d = Dense::from(m, p);
    return Eigen::Index(d.rref().size());
}

}  // namespace cx2::fp
