#pragma once

#include "cx2/exactness.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cx2 {

// A lemma hypothesis does not hold; the message names it.
class HypothesisError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// 0 -> A -f-> B -g-> C -> 0 with eta: g f => 0.
struct Extension {
    TwoMorphism f, g;
    TwoCell eta;
};

// Rows A -f-> B -g-> C and A' -f'-> B' -g'-> C', columns a, b, c,
// squares phi: b f => f' a and psi: c g => g' b.
struct SnakeDiagram {
    TwoMorphism f, g, fp, gp, a, b, c;
    TwoCell eta, etap, phi, psi;
};

struct SnakeColumns {
    KernelData ka, kb, kc;
    CokernelData qa, qb, qc;
};
SnakeColumns canonicalColumns(const SnakeDiagram& D);

// Replacements for the induced rows; the square cells are then solved for.
struct SnakeOverrides {
    std::optional<TwoMorphism> fbar, gbar, fbarp, gbarp;
    std::optional<TwoCell> etabar, etabarp;
};

struct SnakeResult {
    SnakeColumns cols;
    TwoMorphism fbar, gbar, fbarp, gbarp;
    TwoCell etabar, etabarp;
    TwoCell phibar, psibar;    // f k_a => k_b fbar, g k_b => k_c gbar
    TwoCell phibarp, psibarp;  // q_b f' => fbar' q_a, q_c g' => gbar' q_b
    TwoMorphism d;             // Kc -> Qa
    TwoCell delta, deltaPrime; // d gbar => 0, fbar' d => 0
    ComplexSequence sixTerm;
    std::vector<std::pair<std::string, bool>> muIdentities;
    std::vector<bool> exact;  // at Kb, Kc, Qa, Qb
    bool allExact() const;
    bool identitiesHold() const;
};

// psi f + g' phi + eta' a against c eta.
bool snakeCommutes(const SnakeDiagram& D);
// Empty when the hypotheses hold, else the first failing one. With extensions set the
// rows must be extensions; otherwise (g, eta) = Coker f and (f', eta') = Ker g'.
std::string snakeHypothesisFailure(const SnakeDiagram& D, const SnakeColumns& cols, bool extensions);
SnakeResult snake(const SnakeDiagram& D, const std::optional<SnakeColumns>& cols = std::nullopt,
                  const SnakeOverrides& overrides = {}, bool extensions = false);

struct AnacondaResult {
    SnakeResult snake;
    ComplexSequence sequence;  // 0, Pip a..c, Ker a..c, Coker a..c, Copip a..c, 0
    std::vector<std::string> labels;
    std::vector<bool> exact;
    // Composites of adjacent cells against omega, mu, sigma: +1, -1, or 0 for neither.
    std::vector<std::string> loopNames;
    std::vector<int> loopSigns;
    bool allExact() const;
    bool loopsMatch() const;
};
AnacondaResult anaconda(const SnakeDiagram& D);

// A morphism of complexes f: A -> B with phi_n: b_n f_n => f_{n+1} a_n.
struct ComplexMorphism {
    std::vector<TwoMorphism> maps;
    std::vector<TwoCell> cells;
};
// Degreewise f_n, g_n with omega_n: g_n f_n => 0 over a common window.
struct ComplexExtension {
    ComplexSequence A, B, C;
    ComplexMorphism f, g;
    std::vector<TwoCell> omega;
};
// Throws unless the data are complexes, morphisms of complexes and a degreewise extension.
void validateComplexExtension(const ComplexExtension& E);

struct LesResult {
    int lo = 0, hi = 0;
    // Degrees lo-1 .. hi+1; each entry holds A, B, C.
    std::vector<std::vector<TwoObject>> H;
    std::vector<SnakeResult> snakes;  // snake n gives H_n -> H_n -> H_n -> H_{n+1}
    ComplexSequence sequence;         // H_{lo-1}(A) .. H_{hi+1}(C)
    std::vector<bool> exact;
    std::vector<bool> identities;
    // Ker h_n against the homology object of the window, compared by pi_0 and pi_1 ranks (fields).
    std::vector<bool> homologyMatches;
    bool pi0Exact = false, omegaExact = false;  // classical shadows, fields only
    bool allExact() const;
};
LesResult lesHomology(const ComplexExtension& E);

// Rows A_i -f_i-> B_i -g_i-> C_i (i = 1..3) and columns a_1, a_2 (alpha), b_1, b_2 (beta),
// c_1, c_2 (gamma); phi_i: b_i f_i => f_{i+1} a_i, psi_i: c_i g_i => g_{i+1} b_i.
struct Grid3x3 {
    TwoMorphism f[3], g[3], a[2], b[2], c[2];
    TwoCell eta[3], alpha, beta, gamma, phi[2], psi[2];
};
struct Report3x3 {
    std::vector<std::pair<std::string, bool>> hypotheses;
    std::string failure;  // first failing hypothesis
    bool firstRowRelativeExact = false;
    bool firstRowExtension = false;
    // Part 2, evaluated when the middle row and column are relative exact.
    bool middleRelativeExact = false;
    bool allRelativeExact = false;
    bool holds() const { return failure.empty() && firstRowRelativeExact; }
};
Report3x3 check3x3(const Grid3x3& G);

// Rows (f, eta, g), (f', eta', g') and columns a, b, c as in a snake diagram.
struct ShortFiveReport {
    std::string failure;
    ArrowClassification a, b, c;
    bool equivalenceHolds = true;  // flanks equivalences => b equivalence
    bool faithfulHolds = true, fullHolds = true, cofaithfulHolds = true;
    bool fullyFaithfulHolds = true, fullyCofaithfulHolds = true;
    bool holds() const;
    bool refinedHolds() const;
};
ShortFiveReport checkShortFive(const SnakeDiagram& D);

// Factorization of a relative exact window through I_n = K(a_{n+1}, alpha_{n+1}):
// pieces[i] is I_n -> A_{n+1} -> I_{n+1} for n = lo-1+i.
struct RelativeDecomposition {
    std::vector<Extension> pieces;
    std::vector<bool> extensions;  // each piece is an extension
    std::vector<bool> recomposes;  // k phi q . eta * eta = alpha
    bool holds() const;
};
RelativeDecomposition decomposeRelativeExact(const ComplexSequence& s);
// Relative exactness of 0 -> A -> B -> C -> 0 at A, B, C.
std::vector<bool> relativeExactPadded(const TwoMorphism& f, const TwoCell& eta, const TwoMorphism& g);

}  // namespace cx2
