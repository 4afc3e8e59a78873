#pragma once

#include "cx2/base.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cx2 {

// An arrow A1 -> A0 of the base.
struct TwoObject {
    BaseMorphism d;

    TwoObject() = default;
    explicit TwoObject(BaseMorphism boundary) : d(std::move(boundary)) {}

    const BaseObject& top() const { return d.src; }
    const BaseObject& bottom() const { return d.tgt; }
    BaseRing ring() const { return d.src.ring; }
    bool operator==(const TwoObject&) const = default;

    static TwoObject zero(BaseRing r);
    static TwoObject discrete(const BaseObject& a);   // 0 -> A
    static TwoObject connected(const BaseObject& a);  // A -> 0
};

// Commutative square (u1, u0) from f to g: g u1 = u0 f.
struct TwoMorphism {
    TwoObject src, tgt;
    BaseMorphism u1, u0;

    TwoMorphism() = default;
    TwoMorphism(TwoObject s, TwoObject t, BaseMorphism top, BaseMorphism bottom);
    bool operator==(const TwoMorphism&) const = default;
};

// Homotopy a: A0 -> B1 with u1 - u1' = a f and u0 - u0' = g a.
struct TwoCell {
    TwoMorphism from, to;
    BaseMorphism a;

    TwoCell() = default;
    TwoCell(TwoMorphism f, TwoMorphism t, BaseMorphism alpha);
    bool operator==(const TwoCell&) const = default;
    bool isLoop() const;
};

TwoMorphism identity2(const TwoObject& x);
TwoMorphism zero2(const TwoObject& x, const TwoObject& y);
bool isZero2(const TwoMorphism& u);

// v * u is v after u.
TwoMorphism operator*(const TwoMorphism& v, const TwoMorphism& u);
TwoMorphism compose2(const TwoMorphism& a, const TwoMorphism& b);
TwoMorphism operator+(const TwoMorphism& u, const TwoMorphism& v);
TwoMorphism operator-(const TwoMorphism& u);
TwoMorphism operator-(const TwoMorphism& u, const TwoMorphism& v);

TwoCell identityCell(const TwoMorphism& u);
// Loop 0 => 0 on x -> y with component a.
TwoCell loop2(const TwoObject& x, const TwoObject& y, const BaseMorphism& a);
// c1: u => u', c2: u' => u''.
TwoCell vcomp2(const TwoCell& c1, const TwoCell& c2);
TwoCell inverse2(const TwoCell& c);
// v alpha and alpha w.
TwoCell whiskerPost(const TwoMorphism& v, const TwoCell& alpha);
TwoCell whiskerPre(const TwoCell& alpha, const TwoMorphism& w);
// beta * alpha; throws if the two formulas disagree.
TwoCell hcomp2(const TwoCell& beta, const TwoCell& alpha);
// Cell u => u' determined by its component, when it exists.
std::optional<TwoCell> cellBetween(const TwoMorphism& u, const TwoMorphism& v, const BaseMorphism& a);

struct Biproduct2 {
    TwoObject sum;
    TwoMorphism i1, i2, p1, p2;
};
TwoObject directSum2(const TwoObject& x, const TwoObject& y);
TwoObject directSum2(const std::vector<TwoObject>& parts, BaseRing r);
Biproduct2 biproduct2(const TwoObject& x, const TwoObject& y);
TwoMorphism copair2(const TwoMorphism& u, const TwoMorphism& v);
TwoMorphism pair2(const TwoMorphism& u, const TwoMorphism& v);

// Grid u[j][k]: A_k -> B_j.
using Grid2 = std::vector<std::vector<TwoMorphism>>;
TwoMorphism matrixAssemble2(const Grid2& grid, const std::vector<TwoObject>& sources,
                            const std::vector<TwoObject>& targets, BaseRing ring);
Grid2 matrixOf2(const TwoMorphism& u, const std::vector<TwoObject>& sources,
                const std::vector<TwoObject>& targets);
TwoMorphism injection2(const std::vector<TwoObject>& parts, size_t k);
TwoMorphism projection2(const std::vector<TwoObject>& parts, size_t k);

struct Kernel2 {
    TwoObject obj;
    TwoMorphism k;
    TwoCell kappa;  // u k => 0
    BaseMorphism incl;  // bottom of obj into A0 + B1
    TwoMorphism u;
};
Kernel2 kernel2(const TwoMorphism& u);
// a': X -> K with k a' = a and kappa a' = alpha; alpha: u a => 0.
TwoMorphism kernelFactor(const Kernel2& K, const TwoMorphism& a, const TwoCell& alpha);

struct Cokernel2 {
    TwoObject obj;
    TwoMorphism q;
    TwoCell zeta;  // q u => 0
    BaseMorphism proj;  // B1 + A0 onto the top of obj
    TwoMorphism u;
};
Cokernel2 cokernel2(const TwoMorphism& u);
// b': Q -> Y with b' q = b and b' zeta = beta; beta: b u => 0.
TwoMorphism cokernelFactor(const Cokernel2& Q, const TwoMorphism& b, const TwoCell& beta);

struct Root2 {
    TwoObject obj;
    TwoMorphism r;  // obj -> f, (1, k)
    BaseMorphism k;
};
Root2 root2(const TwoCell& loop);
// a': X -> Root with r a' = a, whenever loop a = 0.
TwoMorphism rootFactor(const Root2& R, const TwoMorphism& a);

struct Coroot2 {
    TwoObject obj;
    TwoMorphism r;  // g -> obj, (q, 1)
    BaseMorphism q;
};
Coroot2 coroot2(const TwoCell& loop);
TwoMorphism corootFactor(const Coroot2& R, const TwoMorphism& b);

struct Pip2 {
    TwoObject obj;  // 0 -> N
    TwoCell loop;   // 0 => 0: obj -> f
};
Pip2 pip2(const TwoMorphism& u);
// b: X -> Pip with loop b = beta, for a loop beta: X -> f killed by u.
TwoMorphism pipFactor(const Pip2& P, const TwoCell& beta);

struct Copip2 {
    TwoObject obj;  // C -> 0
    TwoCell loop;   // 0 => 0: g -> obj
};
Copip2 copip2(const TwoMorphism& u);
TwoMorphism copipFactor(const Copip2& P, const TwoCell& beta);

// Kernel of u relative to phi: y u => 0.
struct RelKernel2 {
    Kernel2 ker;
    Root2 root;
    TwoObject obj;
    TwoMorphism k;
    TwoCell kappa;
};
RelKernel2 relKernel2(const TwoMorphism& u, const TwoMorphism& y, const TwoCell& phi);
TwoMorphism relKernelFactor(const RelKernel2& K, const TwoMorphism& a, const TwoCell& alpha);

// Cokernel of u relative to phi: u x => 0.
struct RelCokernel2 {
    Cokernel2 coker;
    Coroot2 coroot;
    TwoObject obj;
    TwoMorphism q;
    TwoCell zeta;
};
RelCokernel2 relCokernel2(const TwoMorphism& x, const TwoMorphism& u, const TwoCell& phi);
TwoMorphism relCokernelFactor(const RelCokernel2& Q, const TwoMorphism& b, const TwoCell& beta);

struct LoopSuspension {
    TwoObject omega, sigma, pi0, pi1;
    BaseMorphism kd, qd;  // kernel and cokernel of the boundary
    TwoCell omegaLoop;    // 0 => 0: Omega x -> x
    TwoCell sigmaLoop;    // 0 => 0: x -> Sigma x
    TwoMorphism eta;      // x -> pi0 x
    TwoMorphism eps;      // pi1 x -> x
};
LoopSuspension loopSuspension(const TwoObject& x);
TwoMorphism omegaMap(const TwoMorphism& u);
TwoMorphism sigmaMap(const TwoMorphism& u);
TwoMorphism pi0Map(const TwoMorphism& u);
TwoMorphism pi1Map(const TwoMorphism& u);

struct ArrowClassification {
    bool faithful = false, full = false, fullyFaithful = false;
    bool cofaithful = false, fullyCofaithful = false;
    bool normalFaithful = false, normalFullyFaithful = false;
    bool normalCofaithful = false, normalFullyCofaithful = false;
    bool equivalence = false;
    bool discreteSource = false, connectedSource = false, splitSource = false;
};
ArrowClassification classify2(const TwoMorphism& u);
// The three-term sequence A1 -> A0 + B1 -> B0 of u.
BaseMorphism leftMap(const TwoMorphism& u);
BaseMorphism rightMap(const TwoMorphism& u);

struct EquivalenceData {
    BaseMorphism v1, v0, epsilon, eta;
    TwoMorphism inverse;
    TwoCell unit;    // u v => 1
    TwoCell counit;  // v u => 1
};
std::optional<EquivalenceData> equivalenceData2(const TwoMorphism& u);
// The equations between u and the data, each as (name, holds).
std::vector<std::pair<std::string, bool>> equivalenceEquations(const TwoMorphism& u, const EquivalenceData& e);

struct Factorization2 {
    TwoMorphism e, l, mhat;  // u = mhat l e strictly
    TwoCell witness;         // u => mhat l e
    TwoMorphism ehat, mbar;  // u = mbar ehat via the cokernel of the kernel
    TwoMorphism mprime;      // u = mprime e via the coroot of the pip
    Pip2 pip;
    Coroot2 coroot;
    Copip2 copip;
    Root2 root;
};
Factorization2 factor2(const TwoMorphism& u);

// Comparisons Coker Ker u -> Root Copip u and Coroot Pip u -> Ker Coker u.
TwoMorphism comparisonBar(const TwoMorphism& u);
TwoMorphism comparison(const TwoMorphism& u);

struct OrthogonalityResult {
    bool holds = false;
    bool existence = false;   // every square admits a filler
    bool uniqueness = false;  // fillers are unique up to a unique cell
    std::string failure;
};
// e: a -> b, m: c -> d.
OrthogonalityResult orthogonal2(const TwoMorphism& e, const TwoMorphism& m);

std::string describe(const TwoObject& x);

}  // namespace cx2
