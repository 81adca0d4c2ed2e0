#include "fermat/poly.hpp"

#include <algorithm>

namespace fermat {

int graded_lex_cmp(const Exps& a, const Exps& b) {
  unsigned long da = 0, db = 0;
  for (unsigned e : a) da += e;
  for (unsigned e : b) db += e;
  if (da != db) return da < db ? -1 : 1;
  // Same total degree: lexicographic with z1 most significant.
  for (std::size_t j = 0; j < a.size() && j < b.size(); ++j)
    if (a[j] != b[j]) return a[j] < b[j] ? -1 : 1;
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

static void check_same_arity(const MultiPoly& a, const MultiPoly& b) {
  if (a.n != b.n) fail("ArityMismatch", "polynomials over different variable counts");
}

bool MultiPoly::operator==(const MultiPoly& o) const { return n == o.n && t == o.t; }

MultiPoly poly_zero(int n) {
  MultiPoly p;
  p.n = n;
  return p;
}

MultiPoly poly_const(int n, Scalar s) {
  MultiPoly p = poly_zero(n);
  if (!s.is_zero()) p.t.emplace(Exps(n, 0u), std::move(s));
  return p;
}

MultiPoly poly_one(int n) { return poly_const(n, scalar_one()); }

MultiPoly poly_var(int n, int j) {
  if (j < 1 || j > n) fail("BadIndex", "variable index out of range");
  MultiPoly p = poly_zero(n);
  Exps e(n, 0u);
  e[j - 1] = 1;
  p.t.emplace(std::move(e), scalar_one());
  return p;
}

MultiPoly poly_monomial(int n, Exps e, Scalar s) {
  if ((int)e.size() != n) fail("ArityMismatch", "exponent tuple has wrong length");
  MultiPoly p = poly_zero(n);
  if (!s.is_zero()) p.t.emplace(std::move(e), std::move(s));
  return p;
}

static void add_term(MultiPoly& p, const Exps& e, const Scalar& s) {
  if (s.is_zero()) return;
  auto it = p.t.find(e);
  if (it == p.t.end()) {
    p.t.emplace(e, s);
  } else {
    it->second = scalar_add(it->second, s);
    if (it->second.is_zero()) p.t.erase(it);
  }
}

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b) {
  check_same_arity(a, b);
  MultiPoly r = a;
  for (const auto& [e, s] : b.t) add_term(r, e, s);
  return r;
}

MultiPoly poly_sub(const MultiPoly& a, const MultiPoly& b) {
  check_same_arity(a, b);
  MultiPoly r = a;
  for (const auto& [e, s] : b.t) add_term(r, e, scalar_neg(s));
  return r;
}

MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) {
  check_same_arity(a, b);
  MultiPoly r = poly_zero(a.n);
  for (const auto& [ea, sa] : a.t)
    for (const auto& [eb, sb] : b.t) {
      Exps e(ea.size());
      for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
      add_term(r, e, scalar_mul(sa, sb));
    }
  return r;
}

MultiPoly poly_neg(const MultiPoly& a) {
  MultiPoly r = a;
  for (auto& [e, s] : r.t) s = scalar_neg(s);
  return r;
}

MultiPoly poly_scale(const Scalar& s, const MultiPoly& a) {
  MultiPoly r = poly_zero(a.n);
  if (s.is_zero()) return r;
  for (const auto& [e, t] : a.t) add_term(r, e, scalar_mul(s, t));
  return r;
}

MultiPoly poly_arith(ArithOp op, const MultiPoly& a, const MultiPoly& b) {
  switch (op) {
    case ArithOp::Add: return poly_add(a, b);
    case ArithOp::Sub: return poly_sub(a, b);
    case ArithOp::Mul: return poly_mul(a, b);
  }
  fail("BadIndex", "unknown arithmetic op");
}

MultiPoly poly_derive(const MultiPoly& a, int j) {
  if (j < 1 || j > a.n) fail("BadIndex", "variable index out of range");
  MultiPoly r = poly_zero(a.n);
  for (const auto& [e, s] : a.t) {
    if (e[j - 1] == 0) continue;
    Exps e2 = e;
    e2[j - 1] -= 1;
    add_term(r, e2, scalar_mul(Scalar::from_long((long)e[j - 1]), s));
  }
  return r;
}

MultiPoly poly_shift(const MultiPoly& a, const std::vector<Scalar>& c, int sign) {
  if ((int)c.size() != a.n) fail("ArityMismatch", "shift vector has wrong length");
  std::vector<Scalar> step(c.size());
  for (std::size_t j = 0; j < c.size(); ++j)
    step[j] = sign >= 0 ? c[j] : scalar_neg(c[j]);

  // Cache powers of each step component up to the largest exponent used.
  std::vector<unsigned> maxe(a.n, 0u);
  for (const auto& [e, s] : a.t)
    for (int j = 0; j < a.n; ++j) maxe[j] = std::max(maxe[j], e[j]);
  std::vector<std::vector<Scalar>> pow(a.n);
  for (int j = 0; j < a.n; ++j) {
    pow[j].reserve(maxe[j] + 1);
    pow[j].push_back(scalar_one());
    for (unsigned t = 1; t <= maxe[j]; ++t)
      pow[j].push_back(scalar_mul(pow[j].back(), step[j]));
  }

  MultiPoly r = poly_zero(a.n);
  for (const auto& [e, s] : a.t) {
    // Expand prod_j (z_j + step_j)^{e_j} one variable at a time.
    MultiPoly acc = poly_const(a.n, s);
    for (int j = 0; j < a.n; ++j) {
      if (e[j] == 0) continue;
      if (step[j].is_zero()) {
        acc = poly_mul(acc, poly_monomial(a.n, [&] { Exps m(a.n, 0u); m[j] = e[j]; return m; }(), scalar_one()));
        continue;
      }
      MultiPoly binom = poly_zero(a.n);
      for (unsigned t = 0; t <= e[j]; ++t) {
        mpz_class ch;
        mpz_bin_uiui(ch.get_mpz_t(), e[j], t);
        Exps m(a.n, 0u);
        m[j] = e[j] - t;
        add_term(binom, m, scalar_mul(Scalar(GaussianRational(mpq_class(ch))), pow[j][t]));
      }
      acc = poly_mul(acc, binom);
    }
    r = poly_add(r, acc);
  }
  return r;
}

int poly_degree_in(const MultiPoly& a, int j) {
  if (j < 1 || j > a.n) fail("BadIndex", "variable index out of range");
  if (a.is_zero()) return kNegInfDegree;
  int d = 0;
  for (const auto& [e, s] : a.t) d = std::max(d, (int)e[j - 1]);
  return d;
}

int poly_total_degree(const MultiPoly& a) {
  if (a.is_zero()) return kNegInfDegree;
  // Graded order: the last term has maximal total degree.
  const Exps& e = a.t.rbegin()->first;
  int d = 0;
  for (unsigned x : e) d += (int)x;
  return d;
}

bool poly_is_constant(const MultiPoly& a) { return poly_total_degree(a) <= 0; }

Scalar poly_constant_value(const MultiPoly& a) {
  if (a.is_zero()) return Scalar();
  if (!poly_is_constant(a)) fail("WrongShape", "polynomial is not constant");
  return a.t.begin()->second;
}

std::optional<MultiPoly> poly_divide_exact(const MultiPoly& a, const MultiPoly& b) {
  check_same_arity(a, b);
  if (b.is_zero()) return std::nullopt;
  MultiPoly rem = a;
  MultiPoly quo = poly_zero(a.n);
  const Exps& eb = b.t.rbegin()->first;
  const Scalar& sb = b.t.rbegin()->second;
  while (!rem.is_zero()) {
    const Exps& er = rem.t.rbegin()->first;
    const Scalar& sr = rem.t.rbegin()->second;
    Exps eq(er.size());
    for (std::size_t j = 0; j < er.size(); ++j) {
      if (er[j] < eb[j]) return std::nullopt;
      eq[j] = er[j] - eb[j];
    }
    auto sq = scalar_div_exact(sr, sb);
    if (!sq) return std::nullopt;
    MultiPoly qt = poly_monomial(a.n, eq, *sq);
    quo = poly_add(quo, qt);
    rem = poly_sub(rem, poly_mul(qt, b));
  }
  return quo;
}

std::complex<double> poly_eval(const MultiPoly& a, const std::vector<std::complex<double>>& z) {
  if ((int)z.size() != a.n) fail("ArityMismatch", "evaluation point has wrong length");
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [e, s] : a.t) {
    std::complex<double> m = scalar_to_complex(s);
    for (std::size_t j = 0; j < e.size(); ++j)
      for (unsigned t = 0; t < e[j]; ++t) m *= z[j];
    acc += m;
  }
  return acc;
}

int poly_cmp(const MultiPoly& a, const MultiPoly& b) {
  if (a.n != b.n) return a.n < b.n ? -1 : 1;
  auto ia = a.t.rbegin(), ib = b.t.rbegin();
  for (; ia != a.t.rend() && ib != b.t.rend(); ++ia, ++ib) {
    int c = graded_lex_cmp(ia->first, ib->first);
    if (c != 0) return c;
    c = scalar_cmp(ia->second, ib->second);
    if (c != 0) return c;
  }
  if (ia != a.t.rend()) return 1;
  if (ib != b.t.rend()) return -1;
  return 0;
}

// ---------------------------------------------------------------------------

bool RationalFn::operator==(const RationalFn& o) const {
  // Cross-multiplication keeps equality exact for any representation.
  return poly_mul(num, o.den) == poly_mul(o.num, den);
}

RationalFn ratfn_zero(int n) { return {poly_zero(n), poly_one(n)}; }
RationalFn ratfn_one(int n) { return {poly_one(n), poly_one(n)}; }

RationalFn ratfn_from_poly(MultiPoly p) {
  int n = p.n;
  return {std::move(p), poly_one(n)};
}

RationalFn ratfn_from_scalar(int n, const Scalar& s) {
  return {poly_const(n, s), poly_one(n)};
}

static bool poly_is_one(const MultiPoly& p) {
  return p.t.size() == 1 && poly_total_degree(p) == 0 && p.t.begin()->second == scalar_one();
}

RationalFn ratfn_simplify(RationalFn r) {
  check_same_arity(r.num, r.den);
  if (r.den.is_zero()) fail("DivisionByZeroExpression", "rational function with zero denominator");
  if (r.num.is_zero()) return ratfn_zero(r.num.n);

  // Strip the shared monomial content z^min(e).
  Exps mn(r.num.n, 0u);
  bool first = true;
  auto content = [&](const MultiPoly& p) {
    for (const auto& [e, s] : p.t) {
      if (first) {
        mn = e;
        first = false;
      } else {
        for (std::size_t j = 0; j < mn.size(); ++j) mn[j] = std::min(mn[j], e[j]);
      }
    }
  };
  content(r.num);
  content(r.den);
  bool any = false;
  for (unsigned x : mn) any = any || x > 0;
  if (any) {
    auto strip = [&](MultiPoly& p) {
      MultiPoly q = poly_zero(p.n);
      for (const auto& [e, s] : p.t) {
        Exps e2(e.size());
        for (std::size_t j = 0; j < e.size(); ++j) e2[j] = e[j] - mn[j];
        q.t.emplace(std::move(e2), s);
      }
      p = std::move(q);
    };
    strip(r.num);
    strip(r.den);
  }

  // Trial division both ways (cheap, catches every case the pipeline
  // produces; full multivariate gcd is intentionally not attempted).
  if (auto q = poly_divide_exact(r.num, r.den)) {
    r.num = std::move(*q);
    r.den = poly_one(r.num.n);
  } else if (auto q2 = poly_divide_exact(r.den, r.num)) {
    r.den = std::move(*q2);
    r.num = poly_one(r.den.n);
  }

  // Normalize the denominator's leading coefficient: exactly 1 when it is
  // pi-free (a unit), otherwise monic as a polynomial in pi.
  const Scalar& lc = r.den.t.rbegin()->second;
  Scalar u;
  if (lc.pi_degree() == 0) {
    u = scalar_invert(lc);
  } else {
    u = Scalar(gr_inv(lc.c.back()));
  }
  if (u != scalar_one()) {
    r.num = poly_scale(u, r.num);
    r.den = poly_scale(u, r.den);
  }
  return r;
}

RationalFn ratfn_make(MultiPoly num, MultiPoly den) {
  return ratfn_simplify({std::move(num), std::move(den)});
}

RationalFn ratfn_add(const RationalFn& a, const RationalFn& b) {
  return ratfn_make(poly_add(poly_mul(a.num, b.den), poly_mul(b.num, a.den)),
                    poly_mul(a.den, b.den));
}

RationalFn ratfn_sub(const RationalFn& a, const RationalFn& b) {
  return ratfn_make(poly_sub(poly_mul(a.num, b.den), poly_mul(b.num, a.den)),
                    poly_mul(a.den, b.den));
}

RationalFn ratfn_mul(const RationalFn& a, const RationalFn& b) {
  return ratfn_make(poly_mul(a.num, b.num), poly_mul(a.den, b.den));
}

RationalFn ratfn_div(const RationalFn& a, const RationalFn& b) {
  if (b.is_zero()) fail("DivisionByZeroExpression", "division by the zero expression");
  return ratfn_make(poly_mul(a.num, b.den), poly_mul(a.den, b.num));
}

RationalFn ratfn_neg(const RationalFn& a) { return {poly_neg(a.num), a.den}; }

RationalFn ratfn_scale(const Scalar& s, const RationalFn& a) {
  return ratfn_make(poly_scale(s, a.num), a.den);
}

RationalFn ratfn_derive(const RationalFn& a, int j) {
  return ratfn_make(poly_sub(poly_mul(poly_derive(a.num, j), a.den),
                             poly_mul(a.num, poly_derive(a.den, j))),
                    poly_mul(a.den, a.den));
}

RationalFn ratfn_shift(const RationalFn& a, const std::vector<Scalar>& c, int sign) {
  return ratfn_make(poly_shift(a.num, c, sign), poly_shift(a.den, c, sign));
}

bool ratfn_is_constant(const RationalFn& a) {
  if (a.num.is_zero()) return true;
  const Scalar& ln = a.num.t.rbegin()->second;
  const Scalar& ld = a.den.t.rbegin()->second;
  return poly_scale(ld, a.num) == poly_scale(ln, a.den);
}

std::optional<Scalar> ratfn_constant_scalar(const RationalFn& a) {
  if (a.num.is_zero()) return Scalar();
  if (!ratfn_is_constant(a)) return std::nullopt;
  auto q = scalar_div_exact(a.num.t.rbegin()->second, a.den.t.rbegin()->second);
  if (!q) return std::nullopt;  // value exists only in the fraction field (e.g. 1/pi)
  return *q;
}

bool ratfn_is_polynomial(const RationalFn& a) { return poly_is_one(a.den); }

int ratfn_cmp(const RationalFn& a, const RationalFn& b) {
  int c = poly_cmp(a.num, b.num);
  if (c != 0) return c;
  return poly_cmp(a.den, b.den);
}

}  // namespace fermat
