#pragma once

#include "cx2/diagrams.hpp"
#include "cx2/serialize.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cx2 {

// Entities are stored under fixed names so that the command-line tools can read them back:
//   object            objects x
//   square            morphisms u
//   cell              morphisms u, v; cells alpha: u => v
//   loop              cells loop
//   complex           complexes s
//   extension         morphisms f, g; cells eta
//   complexExtension  complexes A, B, C; morphisms f<n>, g<n>; cells fphi<n>, gphi<n>, omega<n>
//   lemmaDiagram      morphisms f, g, fp, gp, a, b, c; cells eta, etap, phi, psi
//   grid3x3           morphisms f1..f3, g1..g3, a1, a2, b1, b2, c1, c2;
//                     cells eta1..eta3, alpha, beta, gamma, phi1, phi2, psi1, psi2
//   nonsplit          objects source, target; morphisms u (fixed, over the integers)
const std::vector<std::string>& instanceKinds();
Workspace genInstance(std::uint64_t seed, const std::string& kind, BaseRing ring, const Bounds& b = {});

void store(Workspace& w, const SnakeDiagram& D);
void store(Workspace& w, const ComplexExtension& E);
void store(Workspace& w, const Grid3x3& G);

SnakeDiagram snakeDiagramFrom(const Workspace& w);
ComplexExtension complexExtensionFrom(const Workspace& w);
Grid3x3 gridFrom(const Workspace& w);

}  // namespace cx2
