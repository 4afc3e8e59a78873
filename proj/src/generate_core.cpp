#include "cx2/generate.hpp"

namespace cx2 {

TwoObject randomTwoObject(Rng& rng, BaseRing ring, const Bounds& b) {
    const BaseObject a1 = randomObject(rng, ring, b), a0 = randomObject(rng, ring, b);
    return TwoObject(randomMorphism(rng, a1, a0, b));
}

TwoMorphism randomSquareBetween(Rng& rng, const TwoObject& f, const TwoObject& g) {
    LinSys sys(f.ring());
    const int u1 = sys.unknown(f.top(), g.top()), u0 = sys.unknown(f.bottom(), g.bottom());
    sys.equation({{.var = u1, .left = g.d}, {.var = u0, .right = f.d, .negative = true}},
                 zeroMap(f.top(), g.bottom()));
    const auto s = sys.sample(rng);
    return {f, g, (*s)[size_t(u1)], (*s)[size_t(u0)]};
}

TwoMorphism randomEquivalence(Rng& rng, const TwoObject& x, const Bounds& b) {
    const BaseMorphism t1 = randomIso(rng, x.top()), t0 = randomIso(rng, x.bottom());
    const BaseMorphism t1inv = *solveBase(t1, identity(x.top()));
    TwoObject y(t0 * x.d * t1inv);
    TwoMorphism u(x, y, t1, t0);
    if (uniform(rng, 0, 1)) {
        // Pad by the contractible object (1: V -> V).
        const BaseObject v = randomObject(rng, x.ring(), b);
        const TwoObject c(identity(v));
        const Biproduct2 s = biproduct2(y, c);
        const TwoMorphism toC = randomSquareBetween(rng, x, c);
        u = s.i1 * u + s.i2 * toC;
    }
    return u;
}

TwoCell randomCellFrom(Rng& rng, const TwoMorphism& u, const Bounds& b) {
    const BaseMorphism a = randomMorphism(rng, u.src.bottom(), u.tgt.top(), b);
    const TwoMorphism v(u.src, u.tgt, u.u1 - a * u.src.d, u.u0 - u.tgt.d * a);
    return {u, v, a};
}

TwoMorphism randomSquare(Rng& rng, BaseRing ring, const Bounds& b) {
    const std::int64_t kind = uniform(rng, 0, 19);
    const TwoObject f = randomTwoObject(rng, ring, b);
    if (kind < 13) return randomSquareBetween(rng, f, randomTwoObject(rng, ring, b));
    if (kind < 15) return randomEquivalence(rng, f, b);
    if (kind < 16) return zero2(f, randomTwoObject(rng, ring, b));
    const TwoMorphism w = randomSquareBetween(rng, f, randomTwoObject(rng, ring, b));
    if (kind < 18) return kernel2(w).k;
    return cokernel2(w).q;
}

TwoCell randomLoop(Rng& rng, const TwoObject& f, const TwoObject& g) {
    LinSys sys(f.ring());
    const int l = sys.unknown(f.bottom(), g.top());
    sys.equation({{l, g.d, {}, false}}, zeroMap(f.bottom(), g.bottom()));
    sys.equation({{l, {}, f.d, false}}, zeroMap(f.top(), g.top()));
    return loop2(f, g, (*sys.sample(rng))[0]);
}

}  // namespace cx2
