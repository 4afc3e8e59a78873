#include "cx2/generate.hpp"

#include <boost/integer/common_factor.hpp>

namespace cx2 {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Mat randomMatrix(Rng& rng, Eigen::Index r, Eigen::Index c, int maxEntry) {
    Mat m(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < c; ++j) m(i, j) = uniform(rng, -maxEntry, maxEntry);
    return m;
}

BaseObject randomObject(Rng& rng, BaseRing ring, const Bounds& b) {
    const int n = int(uniform(rng, 0, b.maxGens));
    if (ring.isField()) return BaseObject::vectorSpace(ring, n);
    const int nt = b.finite ? n : int(uniform(rng, 0, n));
    std::vector<Int> tor;
    static const int firsts[] = {2, 2, 3, 4};
    static const int steps[] = {1, 1, 2, 3};
    Int d = firsts[uniform(rng, 0, 3)];
    for (int i = 0; i < nt; ++i) {
        if (i) d *= steps[uniform(rng, 0, 3)];
        tor.push_back(d);
    }
    return BaseObject::group(n - nt, tor);
}

BaseMorphism randomMorphism(Rng& rng, const BaseObject& s, const BaseObject& t, const Bounds& b) {
    Mat m = randomMatrix(rng, t.size(), s.size(), b.maxEntry);
    if (!s.ring.isField())
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j) {
                const Int& d = s.ord[size_t(j)];
                const Int& e = t.ord[size_t(i)];
                if (d == 0) continue;
                if (e == 0)
                    m(i, j) = 0;
                else
                    m(i, j) *= e / boost::integer::gcd(e, d);
            }
    // Bias towards sparse and degenerate maps.
    if (uniform(rng, 0, 5) == 0) m.setZero();
    return {s, t, m};
}

BaseMorphism randomIso(Rng& rng, const BaseObject& a) {
    // Products of elementary automorphisms that respect the orders.
    Mat m = eye(a.size());
    for (int k = 0; k < 3 * int(a.size()); ++k) {
        const Eigen::Index i = uniform(rng, 0, a.size() - 1), j = uniform(rng, 0, a.size() - 1);
        if (i == j) continue;
        const Int& di = a.ord[size_t(i)];
        const Int& dj = a.ord[size_t(j)];
        // row i += c row j is an automorphism when generator j -> ... stays well defined
        Int c = uniform(rng, -2, 2);
        if (!a.ring.isField() && dj != 0) {
            if (di == 0) continue;
            c *= di / boost::integer::gcd(di, dj);
        }
        // elementary matrix E = I + c e_i e_j^T: x_j contributes c x_j to coordinate i
        Mat e = eye(a.size());
        e(i, j) = c;
        m = reduceRows(a, e * m);
    }
    return {a, a, m};
}

}  // namespace cx2
