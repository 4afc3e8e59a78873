#pragma once

#include "cx2/integer.hpp"

namespace cx2 {

// D = U * M * V with U, V unimodular and D diagonal in a divisibility chain.
struct SnfDecomposition {
    Mat U, D, V;
    Mat Uinv, Vinv;
    Eigen::Index rank = 0;

    Int diag(Eigen::Index i) const {
        return i < D.rows() && i < D.cols() ? D(i, i) : Int(0);
    }
};

// Pivot: nonzero entry of least absolute value, ties broken row-major.
SnfDecomposition snf(const Mat& M);

}  // namespace cx2
