#pragma once

#include "cx2/base.hpp"

#include <optional>
#include <random>
#include <vector>

namespace cx2 {

using Rng = std::mt19937_64;

// Particular solution plus generators of the homogeneous solutions.
struct SystemSolution {
    Vec particular;
    Mat kernel;
};

// C x = rhs over Z (exact Diophantine) or over F_p.
std::optional<SystemSolution> solveSystem(const Mat& C, const Vec& rhs, BaseRing ring);

// Linear equations between base morphisms: each equation is sum_t L_t X_t R_t = rhs,
// unknowns are morphisms X: S -> T. Over Z, well-definedness of each unknown and the
// torsion of each equation's target are encoded with slack variables.
class LinSys {
public:
    struct Term {
        int var = 0;
        std::optional<BaseMorphism> left, right;
        bool negative = false;
    };

    explicit LinSys(BaseRing r) : ring_(r) {}

    int unknown(const BaseObject& src, const BaseObject& tgt);
    void equation(const std::vector<Term>& terms, const BaseMorphism& rhs);

    std::optional<std::vector<BaseMorphism>> solve() const;
    std::optional<std::vector<BaseMorphism>> sample(Rng& rng) const;
    std::vector<std::vector<BaseMorphism>> homogeneousGenerators() const;
    bool homogeneousTrivial() const { return homogeneousGenerators().empty(); }

    const BaseObject& unknownSource(int v) const { return vars_[size_t(v)].src; }
    const BaseObject& unknownTarget(int v) const { return vars_[size_t(v)].tgt; }

private:
    struct Var {
        BaseObject src, tgt;
        Eigen::Index offset;
    };
    struct Row {
        std::vector<std::pair<Eigen::Index, Int>> coeffs;
        Int modulus;  // 0: exact equality
        Int rhs;
    };

    Eigen::Index xCount() const;
    std::optional<SystemSolution> run() const;
    std::vector<BaseMorphism> unpack(const Vec& x, bool reduce = true) const;

    BaseRing ring_;
    std::vector<Var> vars_;
    std::vector<Row> rows_;
};

}  // namespace cx2
