#pragma once
// Exponential polynomials: finite sums  sum_j r_j(z) * e^{i*rho_j} * e^{i*phi_j(z)}
// with rational-function coefficients r_j over Q(i)[pi], constant residual
// phases rho_j in Q(i)[pi], and phase bodies phi_j that are themselves
// exponential polynomials (so towers like e^{i(z2 + z1*e^{-2i z2})} are first
// class).  This is the normal form every equation residual is reduced to.
//
// Normal form invariants:
//   * terms are merged by (phase, residual) and sorted canonically, with no
//     zero coefficients;
//   * each phase body is normalized, nonzero, and carries no extractable
//     constant part (constants were moved into the residual when the
//     exponential was built);
//   * residuals are reduced: the real pi^1-component lies in [0, 1/2)*pi,
//     quarter turns having been folded into the coefficient as 1/i/-1/-i.
//
// Equality of normal forms is decidable structurally; the zero test on top of
// it is three-valued (Zero / NonZero / Unknown) and sound in both definite
// directions.

#include <memory>
#include <vector>

#include "fermat/poly.hpp"

namespace fermat {

struct ExpPoly;
using PhasePtr = std::shared_ptr<const ExpPoly>;

struct ExpTerm {
  RationalFn coeff;
  PhasePtr phase;   // null = no exponential factor
  Scalar residual;  // constant phase rho: the term carries e^{i*rho}
};

struct ExpPoly {
  int n = 0;
  std::vector<ExpTerm> terms;  // normal form; empty = zero

  bool is_structural_zero() const { return terms.empty(); }
};

enum class Verdict { Zero, NonZero, Unknown };

// Result of the zero test.  `offending` is populated for Unknown verdicts
// with the terms that blocked a decision.
struct Tri {
  Verdict verdict = Verdict::Unknown;
  ExpPoly offending;
};

enum class Shape { Constant, PolynomialNonConstant, Transcendental };

// sum q_j * d/dz_j with polynomial coefficients (the linear operator L).
struct DiffOp {
  int n = 0;
  std::vector<std::pair<int, MultiPoly>> parts;  // (variable index, q_j), q_j != 0
  bool constant_coefficients() const;
};

// --- constructors ----------------------------------------------------------

ExpPoly ep_zero(int n);
ExpPoly ep_one(int n);
ExpPoly ep_from_scalar(int n, const Scalar& s);
ExpPoly ep_from_poly(MultiPoly p);
ExpPoly ep_from_ratfn(RationalFn r);
ExpPoly ep_var(int n, int j);
// A single normalized term coeff * e^{i*residual} * e^{i*phase}.
ExpPoly ep_single(RationalFn coeff, PhasePtr phase, Scalar residual);
// e^{i*phi}: extracts phi's constant part into the residual, folds quarter
// turns into the coefficient, wraps what is left as the phase body.
ExpPoly ep_exp(const ExpPoly& phi);
// Normalize an arbitrary term list (merge, sort, drop zeros).
ExpPoly ep_make(int n, std::vector<ExpTerm> terms);

// --- arithmetic -------------------------------------------------------------

ExpPoly ep_arith(ArithOp op, const ExpPoly& a, const ExpPoly& b);
ExpPoly ep_add(const ExpPoly& a, const ExpPoly& b);
ExpPoly ep_sub(const ExpPoly& a, const ExpPoly& b);
ExpPoly ep_mul(const ExpPoly& a, const ExpPoly& b);
ExpPoly ep_neg(const ExpPoly& a);
ExpPoly ep_scale(const Scalar& s, const ExpPoly& a);
ExpPoly ep_scale_rat(const RationalFn& r, const ExpPoly& a);
// Division is supported only by exponential-free divisors (a single term with
// no phase and no residual).  Zero divisor: DivisionByZeroExpression.
// Exponential-bearing divisor: WrongShape.
ExpPoly ep_div(const ExpPoly& a, const ExpPoly& b);
// Nonnegative exponents only (checked by the caller/parser for negativity).
ExpPoly ep_pow(const ExpPoly& a, unsigned long e);

// --- calculus ---------------------------------------------------------------

ExpPoly ep_derive(const ExpPoly& a, int j);
ExpPoly ep_apply_L(const ExpPoly& a, const DiffOp& op);
// a(z + sign*c); re-normalizes exponentials so shift-created constants fold.
ExpPoly ep_shift(const ExpPoly& a, const std::vector<Scalar>& c, int sign);

// --- predicates -------------------------------------------------------------

// Three-valued zero test.  Zero and NonZero are proofs; Unknown is honest.
Tri ep_is_zero(const ExpPoly& a);

// Structural shape of the normal form: Transcendental iff a genuine
// exponential factor (a phase body) survives; otherwise Constant iff every
// coefficient is constant.  Residual factors e^{i*rho} are constants and do
// not make an expression transcendental.
Shape ep_classify_shape(const ExpPoly& a);

// True when the expression is entire by shape: every coefficient denominator
// (including inside nested phase bodies) is constant.
bool ep_entire_shape(const ExpPoly& a);

// Sound one-sided nonconstancy certificate: true only when the expression is
// provably not identically constant.  False means "could not certify".
bool provably_nonconstant(const ExpPoly& a);

// Any exponential content at all (phase or nonzero residual)?
bool ep_has_exponential_factor(const ExpPoly& a);
// Any genuine (non-constant) exponential, i.e. a phase body?
bool ep_has_phase_factor(const ExpPoly& a);

// The expression as a plain rational function, when it is one (no phases, no
// residuals).  Zero yields the zero rational function.
std::optional<RationalFn> ep_as_ratfn(const ExpPoly& a);

// Deterministic total order on normal forms; 0 iff structurally equal.
int ep_cmp(const ExpPoly& a, const ExpPoly& b);
int phase_cmp(const PhasePtr& a, const PhasePtr& b);
bool ep_equal(const ExpPoly& a, const ExpPoly& b);

}  // namespace fermat
