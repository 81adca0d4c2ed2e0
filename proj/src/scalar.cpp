#include "fermat/scalar.hpp"

#include <cmath>

namespace fermat {

GaussianRational gr_add(const GaussianRational& a, const GaussianRational& b) {
  return {a.re + b.re, a.im + b.im};
}

GaussianRational gr_sub(const GaussianRational& a, const GaussianRational& b) {
  return {a.re - b.re, a.im - b.im};
}

GaussianRational gr_mul(const GaussianRational& a, const GaussianRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianRational gr_neg(const GaussianRational& a) { return {-a.re, -a.im}; }

GaussianRational gr_conj(const GaussianRational& a) { return {a.re, -a.im}; }

mpq_class gr_norm(const GaussianRational& a) { return a.re * a.re + a.im * a.im; }

GaussianRational gr_inv(const GaussianRational& a) {
  if (a.is_zero()) fail("NotInvertible", "division by zero in Q(i)");
  mpq_class n = gr_norm(a);
  return {a.re / n, -a.im / n};
}

GaussianRational gr_div(const GaussianRational& a, const GaussianRational& b) {
  return gr_mul(a, gr_inv(b));
}

GaussianRational gr_i_power(long m) {
  long r = ((m % 4) + 4) % 4;
  switch (r) {
    case 0: return GaussianRational(1L);
    case 1: return {mpq_class(0), mpq_class(1)};
    case 2: return GaussianRational(-1L);
    default: return {mpq_class(0), mpq_class(-1)};
  }
}

int gr_cmp(const GaussianRational& a, const GaussianRational& b) {
  int c = cmp(a.re, b.re);
  if (c != 0) return c < 0 ? -1 : 1;
  c = cmp(a.im, b.im);
  return c == 0 ? 0 : (c < 0 ? -1 : 1);
}

std::complex<double> gr_to_complex(const GaussianRational& a) {
  return {a.re.get_d(), a.im.get_d()};
}

// ---------------------------------------------------------------------------

Scalar Scalar::pi_power(GaussianRational q, std::size_t m) {
  Scalar s;
  if (q.is_zero()) return s;
  s.c.assign(m + 1, GaussianRational());
  s.c[m] = std::move(q);
  return s;
}

const GaussianRational& Scalar::coeff(std::size_t m) const {
  static const GaussianRational kZero;
  return m < c.size() ? c[m] : kZero;
}

void Scalar::trim() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Scalar scalar_add(const Scalar& a, const Scalar& b) {
  Scalar r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t m = 0; m < r.c.size(); ++m) r.c[m] = gr_add(a.coeff(m), b.coeff(m));
  r.trim();
  return r;
}

Scalar scalar_sub(const Scalar& a, const Scalar& b) {
  Scalar r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t m = 0; m < r.c.size(); ++m) r.c[m] = gr_sub(a.coeff(m), b.coeff(m));
  r.trim();
  return r;
}

Scalar scalar_mul(const Scalar& a, const Scalar& b) {
  Scalar r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, GaussianRational());
  for (std::size_t m = 0; m < a.c.size(); ++m) {
    if (a.c[m].is_zero()) continue;
    for (std::size_t l = 0; l < b.c.size(); ++l)
      r.c[m + l] = gr_add(r.c[m + l], gr_mul(a.c[m], b.c[l]));
  }
  r.trim();
  return r;
}

Scalar scalar_neg(const Scalar& a) {
  Scalar r = a;
  for (auto& g : r.c) g = gr_neg(g);
  return r;
}

Scalar scalar_arith(ArithOp op, const Scalar& a, const Scalar& b) {
  switch (op) {
    case ArithOp::Add: return scalar_add(a, b);
    case ArithOp::Sub: return scalar_sub(a, b);
    case ArithOp::Mul: return scalar_mul(a, b);
  }
  fail("BadIndex", "unknown arithmetic op");
}

Scalar scalar_invert(const Scalar& a) {
  if (a.is_zero()) fail("NotInvertible", "zero has no inverse");
  if (a.pi_degree() != 0)
    fail("NotInvertible", "scalar involves pi; not a unit of Q(i)[pi]");
  return Scalar(gr_inv(a.c[0]));
}

std::optional<Scalar> scalar_div_exact(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return Scalar();
  if (a.pi_degree() < b.pi_degree()) return std::nullopt;
  // Long division in the variable pi over the field Q(i).
  Scalar rem = a;
  Scalar quo;
  quo.c.assign(a.pi_degree() - b.pi_degree() + 1, GaussianRational());
  const GaussianRational lead_inv = gr_inv(b.c.back());
  while (!rem.is_zero() && rem.pi_degree() >= b.pi_degree()) {
    std::size_t shift = rem.pi_degree() - b.pi_degree();
    GaussianRational q = gr_mul(rem.c.back(), lead_inv);
    quo.c[shift] = q;
    for (std::size_t m = 0; m < b.c.size(); ++m)
      rem.c[m + shift] = gr_sub(rem.c[m + shift], gr_mul(q, b.c[m]));
    rem.trim();
  }
  if (!rem.is_zero()) return std::nullopt;
  quo.trim();
  return quo;
}

std::optional<GaussianRational> fold_unit_phase(const Scalar& theta) {
  // Need theta = q*pi exactly, q real with denominator 1 or 2.
  if (theta.is_zero()) return GaussianRational(1L);
  if (theta.pi_degree() != 1) return std::nullopt;
  if (!theta.c[0].is_zero()) return std::nullopt;
  const GaussianRational& q = theta.c[1];
  if (q.im != 0) return std::nullopt;
  mpq_class two_q = 2 * q.re;
  if (two_q.get_den() != 1) return std::nullopt;
  // e^{i*(m/2)*pi} = i^m
  mpz_class m = two_q.get_num() % 4;
  return gr_i_power(m.get_si());
}

std::pair<GaussianRational, Scalar> reduce_residual_phase(const Scalar& theta) {
  // Peel quarter turns out of the real pi^1-component: write its rational
  // coefficient q as m/2 + q' with m integral and q' in [0, 1/2); the folded
  // factor is i^m and the remainder keeps q'.
  if (theta.pi_degree() < 1 || theta.coeff(1).re == 0)
    return {GaussianRational(1L), theta};
  Scalar rest = theta;
  mpq_class q = rest.c[1].re;
  mpq_class two_q = 2 * q;
  mpz_class m;
  mpz_fdiv_q(m.get_mpz_t(), two_q.get_num_mpz_t(), two_q.get_den_mpz_t());
  rest.c[1].re = q - mpq_class(m) / 2;
  rest.trim();
  mpz_class r4 = m % 4;
  if (r4 < 0) r4 += 4;
  return {gr_i_power(r4.get_si()), rest};
}

std::complex<double> scalar_to_complex(const Scalar& a) {
  const double pi = 3.14159265358979323846264338327950288;
  std::complex<double> acc(0.0, 0.0);
  double p = 1.0;
  for (const auto& g : a.c) {
    acc += gr_to_complex(g) * p;
    p *= pi;
  }
  return acc;
}

int scalar_cmp(const Scalar& a, const Scalar& b) {
  if (a.c.size() != b.c.size()) return a.c.size() < b.c.size() ? -1 : 1;
  for (std::size_t m = a.c.size(); m-- > 0;) {
    int c = gr_cmp(a.c[m], b.c[m]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace fermat
