#pragma once

#include "cx2/integer.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cx2 {

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Prime field F_p when p > 0, the integers when p == 0.
struct BaseRing {
    std::int64_t p = 0;

    static BaseRing field(std::int64_t p);
    static BaseRing integers() { return {}; }
    bool isField() const { return p > 0; }
    bool operator==(const BaseRing&) const = default;
    std::string name() const;
};

// Generators with their orders. Over F_p every order is p; over Z an order is
// 0 (free) or >= 2. Constructed kernels and cokernels come out in invariant-factor
// form; biproducts keep block order.
struct BaseObject {
    BaseRing ring;
    std::vector<Int> ord;

    static BaseObject vectorSpace(BaseRing r, int dim);
    static BaseObject group(std::vector<Int> orders);
    static BaseObject group(int freeRank, std::vector<Int> torsion);
    static BaseObject zero(BaseRing r) { return {r, {}}; }

    Eigen::Index size() const { return Eigen::Index(ord.size()); }
    bool empty() const { return ord.empty(); }
    bool isCanonical() const;
    int freeRank() const;
    std::vector<Int> torsion() const;
    bool operator==(const BaseObject&) const = default;
    std::string describe() const;
};

// Columns are source generators, rows are target generators.
struct BaseMorphism {
    BaseObject src, tgt;
    Mat m;

    BaseMorphism() = default;
    // Validates well-definedness and reduces each row modulo its target order.
    BaseMorphism(BaseObject s, BaseObject t, Mat entries);

    static BaseMorphism trusted(BaseObject s, BaseObject t, Mat entries);
    bool operator==(const BaseMorphism& o) const;
    bool operator!=(const BaseMorphism& o) const { return !(*this == o); }
};

void validateMatrix(const BaseObject& s, const BaseObject& t, const Mat& m);
Mat reduceRows(const BaseObject& t, Mat m);

BaseMorphism identity(const BaseObject& a);
BaseMorphism zeroMap(const BaseObject& a, const BaseObject& b);
bool isZero(const BaseMorphism& f);

BaseMorphism operator*(const BaseMorphism& g, const BaseMorphism& f);
BaseMorphism operator+(const BaseMorphism& a, const BaseMorphism& b);
BaseMorphism operator-(const BaseMorphism& a, const BaseMorphism& b);
BaseMorphism operator-(const BaseMorphism& a);

BaseObject directSum(const BaseObject& a, const BaseObject& b);
BaseObject directSum(const std::vector<BaseObject>& parts);
// (f g): A+B -> C
BaseMorphism copair(const BaseMorphism& f, const BaseMorphism& g);
// [f; g]: A -> B+C
BaseMorphism pair(const BaseMorphism& f, const BaseMorphism& g);
BaseMorphism blockDiag(const BaseMorphism& f, const BaseMorphism& g);
BaseMorphism injection(const BaseObject& a, const BaseObject& b, int which);
BaseMorphism projection(const BaseObject& a, const BaseObject& b, int which);

struct BiproductBase {
    BaseObject sum;
    BaseMorphism i1, i2, p1, p2;
};
BiproductBase biproductBase(const BaseObject& a, const BaseObject& b);

// k: K -> source(f), monomorphic, f k = 0, universal.
BaseMorphism kernelBase(const BaseMorphism& f);
// q: target(f) -> Q, epimorphic, q f = 0, universal.
BaseMorphism cokernelBase(const BaseMorphism& f);

struct PullbackBase {
    BaseObject obj;
    BaseMorphism pA, pB;
};
PullbackBase pullbackBase(const BaseMorphism& f, const BaseMorphism& g);

struct PushoutBase {
    BaseObject obj;
    BaseMorphism iA, iB;
};
PushoutBase pushoutBase(const BaseMorphism& f, const BaseMorphism& g);

// X with a X = b.
std::optional<BaseMorphism> solveBase(const BaseMorphism& a, const BaseMorphism& b);
// X with X a = b.
std::optional<BaseMorphism> lsolveBase(const BaseMorphism& a, const BaseMorphism& b);

// g with f g f = f and g f g = g.
std::optional<BaseMorphism> splitDataBase(const BaseMorphism& f);

struct BaseFlags {
    bool mono = false, epi = false, iso = false, zero = false, splitMono = false, splitEpi = false;
};
BaseFlags classifyBase(const BaseMorphism& f);

bool isMono(const BaseMorphism& f);
bool isEpi(const BaseMorphism& f);
bool isIso(const BaseMorphism& f);
// Exactness of A -m-> B -e-> C at B.
bool isExactBase(const BaseMorphism& m, const BaseMorphism& e);

// Kernel or cokernel object presented by generators and relations.
struct Presentation {
    BaseObject obj;
    Mat toCanon;    // rows: canonical generators in terms of the ambient ones
    Mat fromCanon;  // columns: ambient lifts of the canonical generators
};
// Z^n / column span of R in invariant-factor form.
Presentation presentQuotient(const Mat& R);

}  // namespace cx2
