#pragma once

#include "cx2/cx2.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cx2 {

// (k, kappa) with kappa: u k => 0, not necessarily canonical.
struct KernelData {
    TwoMorphism u, k;
    TwoCell kappa;
};
struct CokernelData {
    TwoMorphism u, q;
    TwoCell zeta;  // q u => 0
};
KernelData kernelData(const Kernel2& K);
CokernelData cokernelData(const Cokernel2& Q);
// The comparison with the canonical kernel (cokernel) is an equivalence.
bool isKernelData(const KernelData& K);
bool isCokernelData(const CokernelData& Q);

struct Lift {
    TwoMorphism map;
    TwoCell cell;
};
// x': X -> K with chi: x => k x' and kappa x' . u chi = theta, for theta: u x => 0.
std::optional<Lift> liftKernel(const KernelData& K, const TwoMorphism& x, const TwoCell& theta);
// y': Q -> Y with chi: y => y' q and y' zeta . chi u = theta, for theta: y u => 0.
std::optional<Lift> descendCokernel(const CokernelData& Q, const TwoMorphism& y, const TwoCell& theta);
// Cell x' => 0 whose whiskering by k is theta: k x' => 0.
std::optional<TwoCell> liftNullCell(const KernelData& K, const TwoMorphism& xp, const TwoCell& theta);
// Cell y' => 0 whose whiskering by q is theta: y' q => 0.
std::optional<TwoCell> descendNullCell(const CokernelData& Q, const TwoMorphism& yp, const TwoCell& theta);

// The loop c2 m1 . m3 c1^-1 for c1: m2 m1 => 0 and c2: m3 m2 => 0.
TwoCell adjacentLoop(const TwoMorphism& m1, const TwoCell& c1, const TwoMorphism& m3, const TwoCell& c2);

// alpha: u t => 0 and beta: v u => 0 are compatible when v alpha = beta t.
bool isCompatible(const TwoMorphism& t, const TwoMorphism& u, const TwoMorphism& v, const TwoCell& alpha,
                  const TwoCell& beta);

struct ExactnessReport {
    bool exact = false;
    bool viaCokernel = false;  // the induced Coker a -> z is fully faithful
    bool viaKernel = false;    // the induced x -> Ker b is fully cofaithful
    bool routesAgree = false;
};
ExactnessReport exactnessAt(const TwoMorphism& a, const TwoCell& alpha, const TwoMorphism& b);
bool exactAt(const TwoMorphism& a, const TwoCell& alpha, const TwoMorphism& b);

// Both comparisons with Ker b and Coker a are equivalences.
bool isExtension(const TwoMorphism& a, const TwoCell& alpha, const TwoMorphism& b);

// Context: phi: a x => 0, alpha: b a => 0, psi: y b => 0.
struct HomologyResult {
    RelKernel2 kb;     // K(b, psi)
    RelCokernel2 qa;   // Q(a, phi)
    TwoMorphism aprime, bprime;
    TwoCell phiPrime, psiPrime;
    RelCokernel2 coker;  // H as Coker(a', phi')
    RelKernel2 ker;      // H as Ker(b', psi')
    TwoObject H;
    TwoMorphism qprime;  // K(b, psi) -> H
    TwoCell zetaPrime;
    TwoMorphism kprime;  // H -> Q(a, phi)
    TwoCell kappaPrime;
    TwoMorphism comparison;  // Coker route -> Ker route
    bool comparisonEquivalence = false;
};
HomologyResult homologyAt(const TwoMorphism& x, const TwoCell& phi, const TwoMorphism& a, const TwoCell& alpha,
                          const TwoMorphism& b, const TwoCell& psi, const TwoMorphism& y);
bool relativeExactAt(const TwoMorphism& x, const TwoCell& phi, const TwoMorphism& a, const TwoCell& alpha,
                     const TwoMorphism& b, const TwoCell& psi, const TwoMorphism& y);

// A loop pi: 0 => 0: A -> B as the sequence 0 -> A -> B -> 0 at A, B.
struct LoopExactness {
    bool sequence = false;    // exactAt(0, pi, 0)
    bool suspension = false;  // Sigma A -> B fully faithful
    bool loop = false;        // A -> Omega B fully cofaithful
    bool agree = false;
};
LoopExactness loopExactness(const TwoCell& pi);

// Finite window of a complex; outside it everything is zero.
struct ComplexSequence {
    int lo = 0;
    std::vector<TwoObject> objects;  // A_lo .. A_hi
    std::vector<TwoMorphism> maps;   // maps[i]: objects[i] -> objects[i+1]
    std::vector<TwoCell> cells;      // cells[i]: maps[i+1] maps[i] => 0

    int hi() const { return lo + int(objects.size()) - 1; }
    // Throws unless shapes, cells and adjacent compatibilities are valid.
    void validate() const;
    // Adds zero objects at both ends.
    ComplexSequence padded() const;
    // Exactness at objects[1] .. objects[n-2].
    std::vector<bool> exactness() const;
    // Adjacent composites cells[i+1] maps[i] . maps[i+2] cells[i]^-1.
    std::vector<TwoCell> loops() const;
};
ComplexSequence makeSequence(const std::vector<TwoMorphism>& maps, const std::vector<TwoCell>& cells, int lo = 0);

struct PuppeResult {
    ComplexSequence sequence;  // 0, Pf, Omega A, Omega B, Kf, A, B, Qf, Sigma A, Sigma B, Rf, 0
    std::vector<std::string> labels;
    Kernel2 ker;
    Cokernel2 coker;
    TwoMorphism d, dPrime;
    TwoCell delta, epsilon, deltaPrime, epsilonPrime;
    TwoCell mu;  // zeta k . q kappa^-1
    std::vector<std::pair<std::string, bool>> identities;
    std::vector<bool> exact;  // interior points, in order
    LoopExactness muExact;
    bool allExact() const;
    bool identitiesHold() const;
};
PuppeResult puppe(const TwoMorphism& u);

}  // namespace cx2
