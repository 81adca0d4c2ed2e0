#include "fermat/exppoly.hpp"

#include <algorithm>

namespace fermat {

bool DiffOp::constant_coefficients() const {
  for (const auto& [j, q] : parts)
    if (!poly_is_constant(q)) return false;
  return true;
}

int phase_cmp(const PhasePtr& a, const PhasePtr& b) {
  if (!a && !b) return 0;
  if (!a) return -1;
  if (!b) return 1;
  if (a == b) return 0;
  return ep_cmp(*a, *b);
}

int ep_cmp(const ExpPoly& a, const ExpPoly& b) {
  if (a.n != b.n) return a.n < b.n ? -1 : 1;
  if (a.terms.size() != b.terms.size()) return a.terms.size() < b.terms.size() ? -1 : 1;
  for (std::size_t t = 0; t < a.terms.size(); ++t) {
    int c = phase_cmp(a.terms[t].phase, b.terms[t].phase);
    if (c != 0) return c;
    c = scalar_cmp(a.terms[t].residual, b.terms[t].residual);
    if (c != 0) return c;
    c = ratfn_cmp(a.terms[t].coeff, b.terms[t].coeff);
    if (c != 0) return c;
  }
  return 0;
}

bool ep_equal(const ExpPoly& a, const ExpPoly& b) { return ep_cmp(a, b) == 0; }

// ---------------------------------------------------------------------------
// Normalization

static bool term_key_less(const ExpTerm& a, const ExpTerm& b) {
  int c = phase_cmp(a.phase, b.phase);
  if (c != 0) return c < 0;
  c = scalar_cmp(a.residual, b.residual);
  if (c != 0) return c < 0;
  return ratfn_cmp(a.coeff, b.coeff) < 0;
}

static bool term_key_equal(const ExpTerm& a, const ExpTerm& b) {
  return phase_cmp(a.phase, b.phase) == 0 && a.residual == b.residual;
}

ExpPoly ep_make(int n, std::vector<ExpTerm> terms) {
  std::sort(terms.begin(), terms.end(), term_key_less);
  ExpPoly r;
  r.n = n;
  for (auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    if (!r.terms.empty() && term_key_equal(r.terms.back(), t)) {
      r.terms.back().coeff = ratfn_add(r.terms.back().coeff, t.coeff);
      if (r.terms.back().coeff.is_zero()) r.terms.pop_back();
    } else {
      r.terms.push_back(std::move(t));
    }
  }
  return r;
}

ExpPoly ep_zero(int n) {
  ExpPoly r;
  r.n = n;
  return r;
}

ExpPoly ep_from_ratfn(RationalFn r) {
  int n = r.num.n;
  ExpPoly p = ep_zero(n);
  if (!r.is_zero()) p.terms.push_back({std::move(r), nullptr, Scalar()});
  return p;
}

ExpPoly ep_from_poly(MultiPoly p) { return ep_from_ratfn(ratfn_from_poly(std::move(p))); }

ExpPoly ep_from_scalar(int n, const Scalar& s) { return ep_from_ratfn(ratfn_from_scalar(n, s)); }

ExpPoly ep_one(int n) { return ep_from_scalar(n, scalar_one()); }

ExpPoly ep_var(int n, int j) { return ep_from_poly(poly_var(n, j)); }

ExpPoly ep_single(RationalFn coeff, PhasePtr phase, Scalar residual) {
  ExpPoly r;
  r.n = coeff.num.n;
  if (!coeff.is_zero()) r.terms.push_back({std::move(coeff), std::move(phase), std::move(residual)});
  return r;
}

// Pull the extractable constant out of a normalized body: the constant
// monomial of the phase-free residual-free term, available only when that
// term's denominator is exactly 1 (so e^{i z1/pi} keeps its 1/pi inside).
static Scalar extract_constant(ExpPoly& body) {
  for (std::size_t t = 0; t < body.terms.size(); ++t) {
    ExpTerm& term = body.terms[t];
    if (term.phase || !term.residual.is_zero()) continue;
    if (!ratfn_is_polynomial(term.coeff)) return Scalar();
    Exps zero(body.n, 0u);
    auto it = term.coeff.num.t.find(zero);
    if (it == term.coeff.num.t.end()) return Scalar();
    Scalar c0 = it->second;
    term.coeff.num.t.erase(it);
    if (term.coeff.num.is_zero()) body.terms.erase(body.terms.begin() + t);
    return c0;
  }
  return Scalar();
}

ExpPoly ep_exp(const ExpPoly& phi) {
  ExpPoly body = phi;  // already normalized (all ExpPoly values are)
  Scalar theta = extract_constant(body);
  auto [unit, rho] = reduce_residual_phase(theta);
  RationalFn coeff = ratfn_from_scalar(phi.n, Scalar(unit));
  PhasePtr p = body.is_structural_zero() ? nullptr : std::make_shared<const ExpPoly>(std::move(body));
  return ep_single(std::move(coeff), std::move(p), std::move(rho));
}

// ---------------------------------------------------------------------------
// Arithmetic

static void check_same_arity(const ExpPoly& a, const ExpPoly& b) {
  if (a.n != b.n) fail("ArityMismatch", "expressions over different variable counts");
}

ExpPoly ep_add(const ExpPoly& a, const ExpPoly& b) {
  check_same_arity(a, b);
  std::vector<ExpTerm> terms = a.terms;
  terms.insert(terms.end(), b.terms.begin(), b.terms.end());
  return ep_make(a.n, std::move(terms));
}

ExpPoly ep_neg(const ExpPoly& a) {
  ExpPoly r = a;
  for (auto& t : r.terms) t.coeff = ratfn_neg(t.coeff);
  return r;
}

ExpPoly ep_sub(const ExpPoly& a, const ExpPoly& b) { return ep_add(a, ep_neg(b)); }

ExpPoly ep_mul(const ExpPoly& a, const ExpPoly& b) {
  check_same_arity(a, b);
  std::vector<ExpTerm> terms;
  terms.reserve(a.terms.size() * b.terms.size());
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms) {
      RationalFn coeff = ratfn_mul(ta.coeff, tb.coeff);
      Scalar rho = scalar_add(ta.residual, tb.residual);
      PhasePtr phase;
      if (ta.phase && tb.phase) {
        // Adding two bodies can surface a new constant part (e.g. opposite
        // non-extractable pieces summing to a rational); re-extract it.
        ExpPoly body = ep_add(*ta.phase, *tb.phase);
        rho = scalar_add(rho, extract_constant(body));
        if (!body.is_structural_zero())
          phase = std::make_shared<const ExpPoly>(std::move(body));
      } else if (ta.phase || tb.phase) {
        phase = ta.phase ? ta.phase : tb.phase;
      }
      auto [unit, reduced] = reduce_residual_phase(rho);
      if (unit != GaussianRational(1L)) coeff = ratfn_scale(Scalar(unit), coeff);
      terms.push_back({std::move(coeff), std::move(phase), std::move(reduced)});
    }
  return ep_make(a.n, std::move(terms));
}

ExpPoly ep_scale(const Scalar& s, const ExpPoly& a) {
  if (s.is_zero()) return ep_zero(a.n);
  ExpPoly r = a;
  for (auto& t : r.terms) t.coeff = ratfn_scale(s, t.coeff);
  return r;
}

ExpPoly ep_scale_rat(const RationalFn& r, const ExpPoly& a) {
  return ep_mul(ep_from_ratfn(r), a);
}

ExpPoly ep_arith(ArithOp op, const ExpPoly& a, const ExpPoly& b) {
  switch (op) {
    case ArithOp::Add: return ep_add(a, b);
    case ArithOp::Sub: return ep_sub(a, b);
    case ArithOp::Mul: return ep_mul(a, b);
  }
  fail("BadIndex", "unknown arithmetic op");
}

std::optional<RationalFn> ep_as_ratfn(const ExpPoly& a) {
  if (a.terms.empty()) return ratfn_zero(a.n);
  if (a.terms.size() != 1) return std::nullopt;
  const ExpTerm& t = a.terms[0];
  if (t.phase || !t.residual.is_zero()) return std::nullopt;
  return t.coeff;
}

ExpPoly ep_div(const ExpPoly& a, const ExpPoly& b) {
  check_same_arity(a, b);
  if (b.is_structural_zero()) fail("DivisionByZeroExpression", "division by the zero expression");
  auto d = ep_as_ratfn(b);
  if (!d) fail("WrongShape", "division is only supported by exponential-free expressions");
  ExpPoly r = a;
  for (auto& t : r.terms) t.coeff = ratfn_div(t.coeff, *d);
  return r;
}

ExpPoly ep_pow(const ExpPoly& a, unsigned long e) {
  ExpPoly r = ep_one(a.n);
  for (unsigned long k = 0; k < e; ++k) r = ep_mul(r, a);
  return r;
}

// ---------------------------------------------------------------------------
// Calculus

ExpPoly ep_derive(const ExpPoly& a, int j) {
  ExpPoly sum = ep_zero(a.n);
  for (const auto& t : a.terms) {
    // d/dz_j [ r e^{i rho} e^{i phi} ] = (r' + i r phi') e^{i rho} e^{i phi}
    ExpPoly piece = ep_single(ratfn_derive(t.coeff, j), t.phase, t.residual);
    if (t.phase) {
      ExpPoly dphi = ep_derive(*t.phase, j);
      if (!dphi.is_structural_zero()) {
        ExpPoly self = ep_single(t.coeff, t.phase, t.residual);
        piece = ep_add(piece, ep_mul(self, ep_scale(scalar_i(), dphi)));
      }
    }
    sum = ep_add(sum, piece);
  }
  return sum;
}

ExpPoly ep_apply_L(const ExpPoly& a, const DiffOp& op) {
  if (op.n != a.n) fail("ArityMismatch", "operator and expression arity differ");
  ExpPoly sum = ep_zero(a.n);
  for (const auto& [j, q] : op.parts)
    sum = ep_add(sum, ep_mul(ep_from_poly(q), ep_derive(a, j)));
  return sum;
}

ExpPoly ep_shift(const ExpPoly& a, const std::vector<Scalar>& c, int sign) {
  if ((int)c.size() != a.n) fail("ArityMismatch", "shift vector has wrong length");
  ExpPoly sum = ep_zero(a.n);
  for (const auto& t : a.terms) {
    ExpPoly piece = ep_single(ratfn_shift(t.coeff, c, sign), nullptr, t.residual);
    if (t.phase) {
      // Rebuild the exponential from the shifted body so constants created by
      // the shift (e.g. a -2*pi or a +c_2 landing in the body) fold correctly.
      ExpPoly body = ep_shift(*t.phase, c, sign);
      piece = ep_mul(piece, ep_exp(body));
    }
    sum = ep_add(sum, piece);
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Predicates

bool ep_has_exponential_factor(const ExpPoly& a) {
  for (const auto& t : a.terms)
    if (t.phase || !t.residual.is_zero()) return true;
  return false;
}

bool ep_has_phase_factor(const ExpPoly& a) {
  for (const auto& t : a.terms)
    if (t.phase) return true;
  return false;
}

Shape ep_classify_shape(const ExpPoly& a) {
  if (ep_has_phase_factor(a)) return Shape::Transcendental;
  for (const auto& t : a.terms)
    if (!ratfn_is_constant(t.coeff)) return Shape::PolynomialNonConstant;
  return Shape::Constant;
}

bool ep_entire_shape(const ExpPoly& a) {
  for (const auto& t : a.terms) {
    if (!poly_is_constant(t.coeff.den)) return false;
    if (t.phase && !ep_entire_shape(*t.phase)) return false;
  }
  return true;
}

// Phase groups: terms bucketed by phase body alone (residuals may differ
// inside a group).  The no-phase bucket plays the role of phase 0.
namespace {
struct PhaseGroup {
  PhasePtr phase;
  std::vector<const ExpTerm*> terms;
};

std::vector<PhaseGroup> group_by_phase(const ExpPoly& a) {
  std::vector<PhaseGroup> groups;
  for (const auto& t : a.terms) {
    if (!groups.empty() && phase_cmp(groups.back().phase, t.phase) == 0) {
      groups.back().terms.push_back(&t);
    } else {
      groups.push_back({t.phase, {&t}});
    }
  }
  return groups;
}

ExpPoly phase_or_zero(int n, const PhasePtr& p) { return p ? *p : ep_zero(n); }
}  // namespace

bool provably_nonconstant(const ExpPoly& a) {
  // Certificates below lean on value-distribution arguments for entire
  // functions; bail out unless the expression is entire by shape.
  if (!ep_entire_shape(a)) return false;
  if (a.terms.empty()) return false;

  auto groups = group_by_phase(a);
  bool any_phase = false;
  for (const auto& g : groups) any_phase = any_phase || (g.phase != nullptr);

  if (!any_phase) {
    // a = sum_rho r_rho(z) e^{i rho}: the e^{i rho} are fixed nonzero
    // constants.  With exactly one nonconstant coefficient the sum moves with
    // z no matter how the constants conspire.  (Two or more nonconstant
    // coefficients can in principle cancel through a relation among the
    // units, so certify nothing there.)
    int nonconst = 0;
    for (const auto& t : a.terms)
      if (!ratfn_is_constant(t.coeff)) ++nonconst;
    return nonconst == 1;
  }

  // With genuine exponentials: find a single-term exponential group whose
  // phase is provably nonconstant and provably separated from every other
  // exponential group.  Then for any constant c, a - c sorted into actual
  // constancy classes keeps that group alone in its class, and the
  // exponential-sum cancellation lemma forces its (nonzero) coefficient to
  // vanish — contradiction.  Hence a is nonconstant.
  for (const auto& g : groups) {
    if (!g.phase || g.terms.size() != 1) continue;
    bool ok = provably_nonconstant(*g.phase);
    for (const auto& h : groups) {
      if (!ok) break;
      if (&h == &g) continue;
      ExpPoly delta = ep_sub(*g.phase, phase_or_zero(a.n, h.phase));
      ok = provably_nonconstant(delta);
    }
    if (ok) return true;
  }
  return false;
}

Tri ep_is_zero(const ExpPoly& a) {
  Tri out;
  if (a.terms.empty()) {
    out.verdict = Verdict::Zero;
    out.offending = ep_zero(a.n);
    return out;
  }
  // A single normalized term r * e^{i rho} * e^{i phi} never vanishes
  // identically: r is a nonzero rational function and exponentials are
  // zero-free.
  if (a.terms.size() == 1) {
    out.verdict = Verdict::NonZero;
    out.offending = ep_zero(a.n);
    return out;
  }

  // The group argument needs each exponential e^{i phi} to be meromorphic,
  // i.e. every phase entire by shape.  (Top-level coefficients may be
  // rational: they are small functions, which the cancellation lemma allows.)
  bool phases_ok = true;
  for (const auto& t : a.terms)
    if (t.phase && !ep_entire_shape(*t.phase)) phases_ok = false;

  if (phases_ok) {
    auto groups = group_by_phase(a);
    // A group that is one single term has coefficient r * e^{i rho} != 0.
    // If its phase is provably separated from every other group (including
    // the constants, via the difference with phase 0), the cancellation
    // lemma would force that coefficient to vanish were the sum zero.
    for (const auto& g : groups) {
      if (g.terms.size() != 1) continue;
      bool ok = true;
      for (const auto& h : groups) {
        if (&h == &g) continue;
        ExpPoly delta = ep_sub(phase_or_zero(a.n, g.phase), phase_or_zero(a.n, h.phase));
        if (!provably_nonconstant(delta)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        out.verdict = Verdict::NonZero;
        out.offending = ep_zero(a.n);
        return out;
      }
    }
  }

  out.verdict = Verdict::Unknown;
  out.offending = a;
  return out;
}

}  // namespace fermat
