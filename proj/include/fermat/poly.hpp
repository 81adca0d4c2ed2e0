#pragma once
// Multivariate polynomials over Q(i)[pi] and the rational functions built
// from them.  This is the coefficient algebra for the exponential layer: the
// r_j(z) in front of every exponential live here.
//
// Terms are kept in a map under graded lexicographic order (total degree
// first, then exponents with z1 most significant), so iteration order — and
// therefore printing and hashing — is canonical by construction.

#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "fermat/scalar.hpp"

namespace fermat {

using Exps = std::vector<unsigned>;

// Degree of the zero polynomial.  Guaranteed to survive the arithmetic the
// degree bookkeeping does on it (negation, +/- small ints stay negative).
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min() / 4;

int graded_lex_cmp(const Exps& a, const Exps& b);

struct GradedLexLess {
  bool operator()(const Exps& a, const Exps& b) const { return graded_lex_cmp(a, b) < 0; }
};

struct MultiPoly {
  int n = 0;  // ambient variable count; all exponent tuples have size n
  std::map<Exps, Scalar, GradedLexLess> t;

  bool is_zero() const { return t.empty(); }
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }
};

MultiPoly poly_zero(int n);
MultiPoly poly_const(int n, Scalar s);
MultiPoly poly_one(int n);
// z_j (1-based j); BadIndex when out of range.
MultiPoly poly_var(int n, int j);
MultiPoly poly_monomial(int n, Exps e, Scalar s);

MultiPoly poly_arith(ArithOp op, const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_sub(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_neg(const MultiPoly& a);
MultiPoly poly_scale(const Scalar& s, const MultiPoly& a);

// d/dz_j, exact term-by-term.
MultiPoly poly_derive(const MultiPoly& a, int j);

// a(z + sign*c) for a shift vector c of n scalars; expands each
// (z_j + sign*c_j)^e by the binomial theorem.
MultiPoly poly_shift(const MultiPoly& a, const std::vector<Scalar>& c, int sign);

// Degree in z_j; kNegInfDegree for the zero polynomial.
int poly_degree_in(const MultiPoly& a, int j);
int poly_total_degree(const MultiPoly& a);  // kNegInfDegree for zero

bool poly_is_constant(const MultiPoly& a);  // zero counts as constant
// The unique coefficient when the polynomial is constant.
Scalar poly_constant_value(const MultiPoly& a);

// Exact division: returns a/b when b divides a in Q(i)[pi][z], else nothing.
// Valid because the coefficient ring is an integral domain, so leading terms
// (under graded lex) are multiplicative.
std::optional<MultiPoly> poly_divide_exact(const MultiPoly& a, const MultiPoly& b);

std::complex<double> poly_eval(const MultiPoly& a, const std::vector<std::complex<double>>& z);

// Deterministic total order extending equality (leading terms first).
int poly_cmp(const MultiPoly& a, const MultiPoly& b);

// ---------------------------------------------------------------------------
// RationalFn: num/den with den != 0.  Normal form (see ratfn_simplify):
// zero has den == 1; shared monomial content removed; den divided into num
// (and num into den) when the quotient is exact; den's leading coefficient
// made 1 when pi-free, otherwise monic as a pi-polynomial.  Full multivariate
// gcd is deliberately out of scope — equality goes by cross-multiplication,
// which is exact regardless of representation.

struct RationalFn {
  MultiPoly num, den;

  bool is_zero() const { return num.is_zero(); }
  bool operator==(const RationalFn& o) const;
  bool operator!=(const RationalFn& o) const { return !(*this == o); }
};

RationalFn ratfn_zero(int n);
RationalFn ratfn_one(int n);
RationalFn ratfn_from_poly(MultiPoly p);
RationalFn ratfn_from_scalar(int n, const Scalar& s);
RationalFn ratfn_make(MultiPoly num, MultiPoly den);  // normalizes; den==0 rejected

RationalFn ratfn_simplify(RationalFn r);

RationalFn ratfn_add(const RationalFn& a, const RationalFn& b);
RationalFn ratfn_sub(const RationalFn& a, const RationalFn& b);
RationalFn ratfn_mul(const RationalFn& a, const RationalFn& b);
// DivisionByZeroExpression when b == 0.
RationalFn ratfn_div(const RationalFn& a, const RationalFn& b);
RationalFn ratfn_neg(const RationalFn& a);
RationalFn ratfn_scale(const Scalar& s, const RationalFn& a);

// Quotient rule; the result is normalized like everything else.
RationalFn ratfn_derive(const RationalFn& a, int j);
RationalFn ratfn_shift(const RationalFn& a, const std::vector<Scalar>& c, int sign);

// Exact constancy test: true iff the function is identically a constant,
// decided by the polynomial identity num*lc(den) == den*lc(num) (leading
// coefficients under graded lex), never by heuristics.
bool ratfn_is_constant(const RationalFn& a);
// The constant's value as a pair num/den of scalars is not always available
// in Q(i)[pi] (e.g. 1/pi); this returns the value when den is constant.
std::optional<Scalar> ratfn_constant_scalar(const RationalFn& a);

bool ratfn_is_polynomial(const RationalFn& a);  // den == 1 after simplify

int ratfn_cmp(const RationalFn& a, const RationalFn& b);

}  // namespace fermat
