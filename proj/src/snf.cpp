#include "cx2/snf.hpp"

namespace cx2 {

namespace {

struct Work {
    Mat D, U, V, Uinv, Vinv;

    void swapRows(Eigen::Index a, Eigen::Index b) {
        if (a == b) return;
        D.row(a).swap(D.row(b));
        U.row(a).swap(U.row(b));
        Uinv.col(a).swap(Uinv.col(b));
    }
    void swapCols(Eigen::Index a, Eigen::Index b) {
        if (a == b) return;
        D.col(a).swap(D.col(b));
        V.col(a).swap(V.col(b));
        Vinv.row(a).swap(Vinv.row(b));
    }
    // row i += q * row t
    void addRow(Eigen::Index i, Eigen::Index t, const Int& q) {
        if (q == 0) return;
        D.row(i) += q * D.row(t);
        U.row(i) += q * U.row(t);
        Uinv.col(t) -= q * Uinv.col(i);
    }
    // col j += q * col t
    void addCol(Eigen::Index j, Eigen::Index t, const Int& q) {
        if (q == 0) return;
        D.col(j) += q * D.col(t);
        V.col(j) += q * V.col(t);
        Vinv.row(t) -= q * Vinv.row(j);
    }
    void negateRow(Eigen::Index i) {
        D.row(i) = -D.row(i);
        U.row(i) = -U.row(i);
        Uinv.col(i) = -Uinv.col(i);
    }
};

}  // namespace

SnfDecomposition snf(const Mat& M) {
    const Eigen::Index n = M.rows(), m = M.cols();
    Work w{M, eye(n), eye(m), eye(n), eye(m)};
    Eigen::Index t = 0;
    for (; t < n && t < m; ++t) {
        bool found = false;
        for (;;) {
            Eigen::Index pi = -1, pj = -1;
            Int best = 0;
            for (Eigen::Index i = t; i < n; ++i)
                for (Eigen::Index j = t; j < m; ++j) {
                    const Int& x = w.D(i, j);
                    if (x == 0) continue;
                    Int a = absInt(x);
                    if (pi < 0 || a < best) {
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) break;
            found = true;
            w.swapRows(t, pi);
            w.swapCols(t, pj);
            const Int piv = w.D(t, t);
            bool clean = true;
            for (Eigen::Index i = t + 1; i < n; ++i) {
                if (w.D(i, t) == 0) continue;
                w.addRow(i, t, -(w.D(i, t) / piv));
                if (w.D(i, t) != 0) clean = false;
            }
            for (Eigen::Index j = t + 1; j < m; ++j) {
                if (w.D(t, j) == 0) continue;
                w.addCol(j, t, -(w.D(t, j) / piv));
                if (w.D(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            Eigen::Index bad = -1;
            for (Eigen::Index i = t + 1; i < n && bad < 0; ++i)
                for (Eigen::Index j = t + 1; j < m; ++j)
                    if (w.D(i, j) % piv != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            w.addRow(t, bad, 1);
        }
        if (!found) break;
        if (w.D(t, t) < 0) w.negateRow(t);
    }
    SnfDecomposition r;
    r.rank = t;
    r.D = std::move(w.D);
    r.U = std::move(w.U);
    r.V = std::move(w.V);
    r.Uinv = std::move(w.Uinv);
    r.Vinv = std::move(w.Vinv);
    return r;
}

}  // namespace cx2
