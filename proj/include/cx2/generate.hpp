#pragma once

#include "cx2/base.hpp"
#include "cx2/cx2.hpp"
#include "cx2/linsys.hpp"

namespace cx2 {

struct Bounds {
    int maxGens = 3;      // generators per base object
    int maxEntry = 9;     // |entries| of sampled integer matrices
    bool finite = false;  // integers: torsion only
};

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);
Mat randomMatrix(Rng& rng, Eigen::Index r, Eigen::Index c, int maxEntry);
BaseObject randomObject(Rng& rng, BaseRing ring, const Bounds& b = {});
BaseMorphism randomMorphism(Rng& rng, const BaseObject& s, const BaseObject& t, const Bounds& b = {});
BaseMorphism randomIso(Rng& rng, const BaseObject& a);

TwoObject randomTwoObject(Rng& rng, BaseRing ring, const Bounds& b = {});
// Uniform-ish sample from the group of squares f -> g.
TwoMorphism randomSquareBetween(Rng& rng, const TwoObject& f, const TwoObject& g);
// Mixture of generic squares, equivalences, zero maps and kernel-type maps.
TwoMorphism randomSquare(Rng& rng, BaseRing ring, const Bounds& b = {});
// x -> y with y a twisted copy of x, possibly padded by a contractible summand.
TwoMorphism randomEquivalence(Rng& rng, const TwoObject& x, const Bounds& b = {});
TwoCell randomCellFrom(Rng& rng, const TwoMorphism& u, const Bounds& b = {});
// Loop 0 => 0: f -> g with a random component.
TwoCell randomLoop(Rng& rng, const TwoObject& f, const TwoObject& g);

}  // namespace cx2
