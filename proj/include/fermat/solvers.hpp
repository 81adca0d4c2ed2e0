#pragma once
// Candidate construction and side-condition reporting for each case.
//
// Every constructor materializes the explicit exponential family for its
// case, then verifies the candidate against the equation with the exact
// residual engine; `verified` reports the three-valued outcome honestly.
// The structural preconditions (right case, operator shape, coefficient
// shape) raise WrongCase / WrongShape / NonConstantOperator; the analytic
// side conditions the underlying theory attaches to a phase g are *reported*,
// not enforced.

#include "fermat/pdde.hpp"

namespace fermat {

struct SolutionCandidate {
  ExpPoly f, g;
  int k = 1;
  std::string family;       // "case1", "case2", "case3", "case4", "sine", "linear-phase"
  std::string description;  // human-readable branch/provenance within the toolkit
  Tri verified;
};

// Case I (D != 0, d2 = 0), with underline = shift by -c:
//   f = ( a1_ e^{i g_} - (p a2)_ e^{-i g_} ) / (2 i D_)
SolutionCandidate construct_case1(const PddeProblem& prob, const ExpPoly& g, int k);

// Case II (D = 0, d2 != 0):  f = ( p a2 e^{-i g} - a1 e^{i g} ) / (2 i d2)
SolutionCandidate construct_case2(const PddeProblem& prob, const ExpPoly& g, int k);

// Case III (D = 0, d2 = 0, d1 != 0):  f = ( b1 e^{i g} - p b2 e^{-i g} ) / (2 i d1)
SolutionCandidate construct_case3(const PddeProblem& prob, const ExpPoly& g, int k);

// Case IV (D != 0, d2 != 0), constant-coefficient operator only.  The 2x2
// system matrix
//   A = [[ -d2, D ], [ -L(d2) - d1 d2 / D,  L(D) + D dbar1 / Dbar ]]
// decides the shape: invertible A yields the explicit candidate; singular A
// leaves the two linear relations, whose residuals are materialized when a
// candidate f is supplied alongside g.
struct ImplicitRelations {
  ExpPoly rel1;  // -2 i d2 f + 2 i D fbar - (a1 e^{ig} - p a2 e^{-ig})
  ExpPoly rel2;  //  2 i D L(f) - 2 i d1 f - (-b1 e^{ig} + p b2 e^{-ig})
};

struct Case4Result {
  int k = 1;
  RationalFn A11, A12, A21, A22, detA;
  bool invertible = false;
  std::optional<SolutionCandidate> candidate;
  std::optional<ImplicitRelations> relations;
  std::string description;
};

Case4Result construct_case4(const PddeProblem& prob, const ExpPoly& g, int k,
                            const std::optional<ExpPoly>& f_for_relations = std::nullopt);

// Sine family for the shape (L(f) + p5 f)^2 + f(z+c)^2 = 1 (that is, p1 = p4
// = p = 1, p2 = p3 = p6 = 0, p5 constant):  f = k sin(g_) with g_ = g(z - c).
struct SineCandidate {
  SolutionCandidate cand;
  Tri slope_condition;  // L(g_)^2 - (1 - p5^2)
  Tri plus_condition;   // (e^{i(g + g_)} - i k p5)^2 - (1 - p5^2)
  Tri minus_condition;  // (e^{i(g - g_)} - i k p5)^2 - (1 - p5^2)
};
SineCandidate construct_sine(const PddeProblem& prob, const ExpPoly& g, int k);

// Linear-phase family on C^2 for constant p1..p4, p5 = p6 = 0, p = 1 and
// L = d/dz1: picks A = sign * sqrt(b1 b2 / (a1 a2)) exactly in Q(i)
// (NoExactRoot when no exact root exists), sets g = A z1 + gstar(z2), and
// reports the ratio condition e^{i(g - g_)} = b2 / (i a2 A).
struct LinearPhaseCandidate {
  SolutionCandidate cand;
  GaussianRational A;
  Tri ratio_condition;
  std::string ratio_note;
};
LinearPhaseCandidate construct_linear_phase(const PddeProblem& prob, const ExpPoly& gstar,
                                            int k, int sign);

// ---------------------------------------------------------------------------
// Which clause of the case's solution list a phase g falls into.

struct PropertyReport {
  CaseKind kind = CaseKind::Degenerate;
  int k = 1;
  bool refined = false;     // single-derivative specialization applicable
  std::string clause;       // "(i)".."(iv)" general, "(a)".."(d)" refined, or "none"
  Shape g_shape = Shape::Constant;
  bool g_constant = false;
  // L applied to the case-appropriate argument (g_ under Case I, g under
  // Case II, g(z+c) under Case IV); absent for Case III.
  std::optional<Shape> L_g_shape;
  bool L_g_polynomial = false;
  bool L_g_zero = false;
  std::optional<Shape> plus_shape, minus_shape;  // g + shift, g - shift
  bool g_plus_shift_constant = false;
  bool g_minus_shift_constant = false;
  bool a1_b2_zero = false, a2_b1_zero = false;
  bool a1a2_nonzero = false;

  struct DegreeData {
    int j = 0;        // the derivative variable
    int deg_g = 0;    // deg_{z_j} of the relevant derivative of g
    int deg_a1 = 0, deg_a2 = 0, deg_b1 = 0, deg_b2 = 0;  // b's are bt's in Case II
    bool pair1_applicable = false, pair1_holds = false;
    bool pair2_applicable = false, pair2_holds = false;
  };
  std::optional<DegreeData> degree;
  std::vector<std::string> notes;
};

PropertyReport check_g_properties(const PddeProblem& prob, const ExpPoly& g, int k);

// ---------------------------------------------------------------------------
// Vanishing-pair characterizations and the identities they force.

struct IffIdentity {
  std::string name;  // which pair fired
  bool fires = false;
  bool sides_ok = false;
  std::vector<std::string> side_notes;
  std::optional<ExpPoly> identity;       // residual expected to vanish, given g
  std::optional<Tri> identity_verdict;
  std::optional<ExpPoly> candidate_f;    // explicit f, where the family gives one
  std::optional<Tri> candidate_verdict;
};

struct IffReport {
  int k = 1;
  bool a2_b1_zero = false;   // transcendental-derivative identity, first kind
  bool a1_b2_zero = false;   // second kind
  bool bt1_b2_zero = false;  // pure-exponential family e^{ig}/(2 p5)
  bool bt2_b1_zero = false;  // pure-exponential family p e^{-ig}/(2 p5)
  std::vector<IffIdentity> identities;
};

IffReport check_iff_conditions(const PddeProblem& prob, int k,
                               const std::optional<ExpPoly>& g = std::nullopt);

// Case III consistency identity d1^2 (p b1 b2)(z+c) == (d1(z+c))^2 p bt1 bt2,
// both sides exact polynomials (used by the clause-(iii) check and tests).
std::pair<MultiPoly, MultiPoly> case3_identity_sides(const PddeProblem& prob, int k);

// Exact square root in Q(i), when it exists.
std::optional<GaussianRational> gr_sqrt(const GaussianRational& v);

}  // namespace fermat
