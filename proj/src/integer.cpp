#include "cx2/integer.hpp"

#include <sstream>
#include <utility>

namespace cx2 {

Mat hcat(const Mat& a, const Mat& b) {
    Mat r(a.rows(), a.cols() + b.cols());
    if (a.cols()) r.leftCols(a.cols()) = a;
    if (b.cols()) r.rightCols(b.cols()) = b;
    return r;
}

Mat vcat(const Mat& a, const Mat& b) {
    Mat r(a.rows() + b.rows(), a.cols());
    if (a.rows()) r.topRows(a.rows()) = a;
    if (b.rows()) r.bottomRows(b.rows()) = b;
    return r;
}

Mat blockDiag(const Mat& a, const Mat& b) {
    Mat r = zeros(a.rows() + b.rows(), a.cols() + b.cols());
    if (a.size()) r.topLeftCorner(a.rows(), a.cols()) = a;
    if (b.size()) r.bottomRightCorner(b.rows(), b.cols()) = b;
    return r;
}

Mat diagonal(const std::vector<Int>& d) {
    Mat r = zeros(Eigen::Index(d.size()), Eigen::Index(d.size()));
    for (size_t i = 0; i < d.size(); ++i) r(Eigen::Index(i), Eigen::Index(i)) = d[i];
    return r;
}

Mat selectRows(const Mat& m, const std::vector<Eigen::Index>& rows) {
    Mat r(Eigen::Index(rows.size()), m.cols());
    for (size_t i = 0; i < rows.size(); ++i) r.row(Eigen::Index(i)) = m.row(rows[i]);
    return r;
}

Mat selectCols(const Mat& m, const std::vector<Eigen::Index>& cols) {
    Mat r(m.rows(), Eigen::Index(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) r.col(Eigen::Index(j)) = m.col(cols[j]);
    return r;
}

Int determinant(const Mat& m) {
    const Eigen::Index n = m.rows();
    if (n == 0) return 1;
    Mat a = m;
    Int sign = 1, prev = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            Eigen::Index s = k + 1;
            while (s < n && a(s, k) == 0) ++s;
            if (s == n) return 0;
            a.row(k).swap(a.row(s));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
            for (Eigen::Index j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::string toString(const Mat& m) {
    std::ostringstream os;
    os << '[';
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (i) os << ',';
        os << '[';
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) os << ',';
            os << m(i, j);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

}  // namespace cx2
