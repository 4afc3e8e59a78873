#pragma once

#include "cx2/generate.hpp"
#include "cx2/lemmas.hpp"

namespace cx2 {

// Source (2: Z -> Z), target (0 -> Z/2), top Z -> 0, bottom the quotient Z -> Z/2.
TwoMorphism nonSplitSquare();
// The same shape over F_2 with an invertible source boundary: an equivalence.
TwoMorphism nonSplitContrast();

Extension biproductExtension(const TwoObject& a, const TwoObject& c);
// Kernel of the cokernel of a random kernel, twisted by equivalences at both ends.
Extension randomExtension(Rng& rng, BaseRing ring, const Bounds& b = {});

enum class SnakeRows { Generalized, Extensions, Biproducts };
// b is sampled with a cell g' b f => 0; a and c are induced through the rows.
SnakeDiagram randomSnakeDiagram(Rng& rng, BaseRing ring, SnakeRows rows, const Bounds& b = {});
// The induced columns for given rows and middle map with a cell g' b f => 0.
SnakeDiagram snakeFromMiddle(const Extension& top, const Extension& bottom, const TwoMorphism& b, const TwoCell& theta);

// Snake diagram over discrete objects 0 -> V, from linear maps of vector spaces.
SnakeDiagram discreteSnake(Rng& rng, BaseRing field, int maxDim = 3);

Extension directSumExtension(const Extension& x, const Extension& y);

// Random complex on degrees lo .. lo+length-1, each cell sampled compatible with the previous one.
ComplexSequence randomComplex(Rng& rng, BaseRing ring, int length, const Bounds& b = {}, int lo = 0);
// B_n = A_n + C_n with an upper triangular differential; f and g are the biproduct maps.
ComplexExtension randomComplexExtension(Rng& rng, BaseRing ring, int length, const Bounds& b = {});
ComplexExtension splitComplexExtension(Rng& rng, const ComplexSequence& A, const ComplexSequence& C);

// Rows 2, 3 random extensions with cofaithful columns; row 1 is their kernel row.
// Falls back to projection columns when no sample has cofaithful columns.
Grid3x3 random3x3(Rng& rng, BaseRing ring, const Bounds& b = {});
Grid3x3 biproduct3x3(const Extension& top, const Extension& bottom);
// Replaces A_1 by the zero object.
Grid3x3 brokenCorner(const Grid3x3& G);

// Bottom row is the top row transported along random equivalences; a and c are equivalences.
SnakeDiagram shortFiveEquivalences(Rng& rng, BaseRing ring, const Bounds& b = {});
// b is the inclusion of a summand E into E + E', or the projection E + E' -> E.
SnakeDiagram shortFiveInclusion(Rng& rng, BaseRing ring, const Bounds& b = {});
SnakeDiagram shortFiveProjection(Rng& rng, BaseRing ring, const Bounds& b = {});

// 0 -> A_1 -> ... -> A_m -> 0 spliced from extensions, relative exact everywhere.
ComplexSequence splicedRelativeExact(Rng& rng, BaseRing ring, int length, const Bounds& b = {});

}  // namespace cx2
