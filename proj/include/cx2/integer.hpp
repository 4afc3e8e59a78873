#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <type_traits>
#include <vector>

namespace boost::multiprecision::detail {
// Eigen probes scalar promotion with matrix arguments; cpp_int's byte-container
// constructor test does not tolerate that, so rule matrices out explicitly.
template <class S, int R, int C, int O, int MR, int MC>
struct is_byte_container<Eigen::Matrix<S, R, C, O, MR, MC>> : std::false_type {};
template <class D>
struct is_byte_container<Eigen::MatrixBase<D>> : std::false_type {};
template <class D>
struct is_byte_container<Eigen::DenseBase<D>> : std::false_type {};
template <class D>
struct is_byte_container<Eigen::EigenBase<D>> : std::false_type {};
template <class L, class R, int O>
struct is_byte_container<Eigen::Product<L, R, O>> : std::false_type {};
template <class Op, class L, class R>
struct is_byte_container<Eigen::CwiseBinaryOp<Op, L, R>> : std::false_type {};
template <class Op, class X>
struct is_byte_container<Eigen::CwiseUnaryOp<Op, X>> : std::false_type {};
template <class X>
struct is_byte_container<Eigen::Transpose<X>> : std::false_type {};
template <class X, int R, int C, bool I>
struct is_byte_container<Eigen::Block<X, R, C, I>> : std::false_type {};
}  // namespace boost::multiprecision::detail

#include <boost/multiprecision/eigen.hpp>

namespace cx2 {

using Int = boost::multiprecision::cpp_int;

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Mat = MatrixX<Int>;
using Vec = VectorX<Int>;

inline Mat zeros(Eigen::Index r, Eigen::Index c) { return Mat::Zero(r, c); }
inline Mat eye(Eigen::Index n) { return Mat::Identity(n, n); }

// Least nonnegative residue; m > 0.
inline Int floorMod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline Int floorDiv(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int absInt(const Int& a) { return a < 0 ? Int(-a) : a; }

inline bool isZero(const Mat& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) return false;
    return true;
}

Mat hcat(const Mat& a, const Mat& b);
Mat vcat(const Mat& a, const Mat& b);
Mat blockDiag(const Mat& a, const Mat& b);
Mat diagonal(const std::vector<Int>& d);
Mat selectRows(const Mat& m, const std::vector<Eigen::Index>& rows);
Mat selectCols(const Mat& m, const std::vector<Eigen::Index>& cols);

// Bareiss fraction-free determinant of a square matrix.
Int determinant(const Mat& m);

std::string toString(const Mat& m);

}  // namespace cx2
