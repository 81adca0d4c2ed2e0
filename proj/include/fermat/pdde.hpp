#pragma once
// Case analysis and residual computation for the quadratic functional
// equation X^2 + Y^2 = p with
//   X = p1 L(f) + p2 f(z+c) + p5 f,   Y = p3 L(f) + p4 f(z+c) + p6 f.
//
// For k = +-1 the derived combinations
//   a1 = k p1 - i p3    a2 = k p1 + i p3
//   b1 = k p2 - i p4    b2 = k p2 + i p4
//   bt1 = k p5 - i p6   bt2 = k p5 + i p6
//   d1 = p2 p6 - p4 p5  d2 = p3 p5 - p1 p6   D = p1 p4 - p2 p3
// control which solution family exists.  D, d1, d2 do not depend on k; they
// are the 2x2 minors of [[p1,p2,p5],[p3,p4,p6]], so the degenerate class
// (all three zero) is exactly the proportional-rows class.

#include <array>

#include "fermat/problem.hpp"

namespace fermat {

struct DerivedQuantities {
  int k = 1;
  MultiPoly a1, a2, b1, b2, bt1, bt2, d1, d2, D;
};

DerivedQuantities derive_quantities(const PddeProblem& prob, int k);

enum class CaseKind { CaseI, CaseII, CaseIII, CaseIV, Degenerate };

struct CaseLabel {
  CaseKind kind = CaseKind::Degenerate;
  bool D_zero = false, d1_zero = false, d2_zero = false;
  std::string note;  // degenerate reduction narrative; empty otherwise
};

const char* case_name(CaseKind k);

// Case selection: I = (D != 0, d2 = 0); II = (D = 0, d2 != 0);
// III = (D = 0, d2 = 0, d1 != 0); IV = (D != 0, d2 != 0);
// Degenerate = (D = d1 = d2 = 0).  Independent of k.
CaseLabel classify(const PddeProblem& prob);

// f(z+c); the paper-facing "bar".  sign=-1 gives the "underline" f(z-c).
ExpPoly bar(const PddeProblem& prob, const ExpPoly& f, int sign);
MultiPoly bar(const PddeProblem& prob, const MultiPoly& q, int sign);

// X, Y and the residual X^2 + Y^2 - p for a candidate f.
ExpPoly form_X(const PddeProblem& prob, const ExpPoly& f);
ExpPoly form_Y(const PddeProblem& prob, const ExpPoly& f);
ExpPoly residual(const PddeProblem& prob, const ExpPoly& f);

// Three-valued verification of the equation for the candidate f.
Tri verify(const PddeProblem& prob, const ExpPoly& f);

// ---------------------------------------------------------------------------
// General quadratic-form reduction: for eta1..eta6, eta with
// xi0 = eta1 eta4 - eta2 eta3 != 0, the system
//   (eta1 s + eta2 t + eta5 u)^2 + (eta3 s + eta4 t + eta6 u)^2 = eta
// is solved by
//   (s,t)^T = 1/(2 i xi0) [[-zeta1, eta*zeta2],[tau1, -eta*tau2]] (e^{ig}, e^{-ig})^T
//           + 1/xi0 (xi1, xi2)^T u
// with tau1 = k eta1 - i eta3, tau2 = k eta1 + i eta3, zeta1 = k eta2 - i eta4,
// zeta2 = k eta2 + i eta4, xi1 = eta2 eta6 - eta4 eta5, xi2 = eta3 eta5 - eta1 eta6.

struct MatrixEquation {
  int k = 1;
  MultiPoly xi0, tau1, tau2, zeta1, zeta2, xi1, xi2, eta;
};

// SingularXi0 when eta1 eta4 - eta2 eta3 is identically zero.
MatrixEquation equivalence_transform(const std::array<MultiPoly, 6>& etas,
                                     const MultiPoly& eta, int k);

// Materialize (s, t) for a given phase g and u-part u.
std::pair<ExpPoly, ExpPoly> matrix_solution(const MatrixEquation& me, const ExpPoly& g,
                                            const ExpPoly& u);

// (eta1 s + eta2 t + eta5 u)^2 + (eta3 s + eta4 t + eta6 u)^2 - eta, for tests.
ExpPoly transform_residual(const std::array<MultiPoly, 6>& etas, const MultiPoly& eta,
                           const ExpPoly& s, const ExpPoly& t, const ExpPoly& u);

}  // namespace fermat
