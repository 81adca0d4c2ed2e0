#pragma once
// Exact constants for the toolkit: the ring Q(i)[pi].
//
// Everything the equations' coefficients and shift vectors need lives here:
// Gaussian rationals (re + im*i with arbitrary-precision rationals) extended
// by pi as a transcendental symbol.  Because pi is transcendental over Q(i),
// the ring is a plain polynomial ring and the zero test is decidable — the
// whole symbolic pipeline leans on that.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fermat {

// Uniform error type.  `kind` is a stable machine-readable tag
// ("NotInvertible", "SyntaxError", ...); `what()` carries the prose.
struct Error : std::runtime_error {
  std::string kind;
  Error(std::string k, const std::string& msg)
      : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

[[noreturn]] inline void fail(std::string kind, const std::string& msg) {
  throw Error(std::move(kind), msg);
}

// ---------------------------------------------------------------------------
// GaussianRational: element of Q(i).  mpq_class keeps each part canonical
// (lowest terms, positive denominator), which makes equality componentwise.

struct GaussianRational {
  mpq_class re, im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(long r) : re(r), im(0) {}
  GaussianRational(mpq_class r) : re(std::move(r)), im(0) {}
  GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }
};

GaussianRational gr_add(const GaussianRational& a, const GaussianRational& b);
GaussianRational gr_sub(const GaussianRational& a, const GaussianRational& b);
GaussianRational gr_mul(const GaussianRational& a, const GaussianRational& b);
GaussianRational gr_neg(const GaussianRational& a);
GaussianRational gr_conj(const GaussianRational& a);
// 1/a; NotInvertible on zero.
GaussianRational gr_inv(const GaussianRational& a);
GaussianRational gr_div(const GaussianRational& a, const GaussianRational& b);
// re^2 + im^2 (the field norm; zero iff a is zero).
mpq_class gr_norm(const GaussianRational& a);
// i^m for any integer m.
GaussianRational gr_i_power(long m);
// Deterministic total order (re, then im); used only for canonical sorting.
int gr_cmp(const GaussianRational& a, const GaussianRational& b);
std::complex<double> gr_to_complex(const GaussianRational& a);

// ---------------------------------------------------------------------------
// Scalar: polynomial in pi over Q(i).  c[m] is the coefficient of pi^m.
// Invariant: empty vector represents zero; otherwise c.back() != 0.

struct Scalar {
  std::vector<GaussianRational> c;

  Scalar() = default;
  explicit Scalar(GaussianRational g) {
    if (!g.is_zero()) c.push_back(std::move(g));
  }
  static Scalar from_long(long v) { return Scalar(GaussianRational(v)); }
  // q * pi^m
  static Scalar pi_power(GaussianRational q, std::size_t m);

  bool is_zero() const { return c.empty(); }
  std::size_t pi_degree() const { return c.empty() ? 0 : c.size() - 1; }
  const GaussianRational& coeff(std::size_t m) const;
  void trim();  // restore the top-nonzero invariant after mutation
  bool operator==(const Scalar& o) const { return c == o.c; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
};

enum class ArithOp { Add, Sub, Mul };

Scalar scalar_arith(ArithOp op, const Scalar& a, const Scalar& b);
Scalar scalar_add(const Scalar& a, const Scalar& b);
Scalar scalar_sub(const Scalar& a, const Scalar& b);
Scalar scalar_mul(const Scalar& a, const Scalar& b);
Scalar scalar_neg(const Scalar& a);

// Multiplicative inverse.  Only pi-degree-0 nonzero scalars are units of
// Q(i)[pi]; anything else raises NotInvertible.
Scalar scalar_invert(const Scalar& a);

// Exact division in Q(i)[pi] (univariate polynomial division over the field
// Q(i)); engaged by the polynomial layer's trial division.  Returns nothing
// when the remainder is nonzero.
std::optional<Scalar> scalar_div_exact(const Scalar& a, const Scalar& b);

// e^{i*theta} for theta = q*pi with q a rational in (1/2)Z: the exact unit
// from {1, i, -1, -i}.  Absent for every other scalar (including theta with
// a rational or imaginary component, or pi-degree >= 2).
std::optional<GaussianRational> fold_unit_phase(const Scalar& theta);

// Split theta into a foldable quarter-turn part and a reduced remainder:
// returns (u, theta') with e^{i*theta} = u * e^{i*theta'}, u in {1,i,-1,-i},
// and theta' having its real pi^1-component in [0, 1/2)*pi.  Everything else
// (rational part, imaginary parts, higher pi powers) passes through.
std::pair<GaussianRational, Scalar> reduce_residual_phase(const Scalar& theta);

std::complex<double> scalar_to_complex(const Scalar& a);

// Deterministic total order (degree first, then coefficients from the top).
int scalar_cmp(const Scalar& a, const Scalar& b);

inline Scalar scalar_i() { return Scalar(GaussianRational(mpq_class(0), mpq_class(1))); }
inline Scalar scalar_one() { return Scalar::from_long(1); }
inline Scalar scalar_pi() { return Scalar::pi_power(GaussianRational(1L), 1); }

}  // namespace fermat
