#pragma once

#include "cx2/integer.hpp"

#include <cstdint>
#include <vector>

namespace cx2::fp {

std::int64_t inverse(std::int64_t a, std::int64_t p);

// Dense matrix over F_p in machine words, row-major.
struct Dense {
    Eigen::Index rows = 0, cols = 0;
    std::int64_t p = 2;
    std::vector<std::int64_t> a;

    Dense(Eigen::Index r, Eigen::Index c, std::int64_t p);
    static Dense from(const Mat& m, std::int64_t p);
    Mat toMat() const;

    std::int64_t& operator()(Eigen::Index i, Eigen::Index j) { return a[size_t(i * cols + j)]; }
    std::int64_t operator()(Eigen::Index i, Eigen::Index j) const { return a[size_t(i * cols + j)]; }

    // Reduced row echelon form over the first `limit` columns; returns pivot columns.
    std::vector<Eigen::Index> rref(Eigen::Index limit = -1);
};

// Columns spanning the right null space, in the echelon-free-variable basis.
Mat nullspace(const Mat& m, std::int64_t p);
Eigen::Index rank(const Mat& m, std::int64_t p);

}  // namespace cx2::fp
