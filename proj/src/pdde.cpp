#include "fermat/pdde.hpp"

#include "fermat/parse.hpp"

namespace fermat {

static void check_k(int k) {
  if (k != 1 && k != -1) fail("BadIndex", "k must be +1 or -1");
}

DerivedQuantities derive_quantities(const PddeProblem& prob, int k) {
  check_k(k);
  DerivedQuantities q;
  q.k = k;
  Scalar ks = Scalar::from_long(k);
  Scalar is = scalar_i();
  auto combo = [&](const MultiPoly& u, const MultiPoly& v, int sign_i) {
    MultiPoly iu = poly_scale(ks, u);
    MultiPoly iv = poly_scale(is, v);
    return sign_i > 0 ? poly_add(iu, iv) : poly_sub(iu, iv);
  };
  q.a1 = combo(prob.p1, prob.p3, -1);
  q.a2 = combo(prob.p1, prob.p3, +1);
  q.b1 = combo(prob.p2, prob.p4, -1);
  q.b2 = combo(prob.p2, prob.p4, +1);
  q.bt1 = combo(prob.p5, prob.p6, -1);
  q.bt2 = combo(prob.p5, prob.p6, +1);
  q.d1 = poly_sub(poly_mul(prob.p2, prob.p6), poly_mul(prob.p4, prob.p5));
  q.d2 = poly_sub(poly_mul(prob.p3, prob.p5), poly_mul(prob.p1, prob.p6));
  q.D = poly_sub(poly_mul(prob.p1, prob.p4), poly_mul(prob.p2, prob.p3));
  return q;
}

const char* case_name(CaseKind k) {
  switch (k) {
    case CaseKind::CaseI: return "I";
    case CaseKind::CaseII: return "II";
    case CaseKind::CaseIII: return "III";
    case CaseKind::CaseIV: return "IV";
    case CaseKind::Degenerate: return "degenerate";
  }
  return "?";
}

CaseLabel classify(const PddeProblem& prob) {
  DerivedQuantities q = derive_quantities(prob, 1);
  CaseLabel label;
  label.D_zero = q.D.is_zero();
  label.d1_zero = q.d1.is_zero();
  label.d2_zero = q.d2.is_zero();
  if (!label.D_zero && label.d2_zero) {
    label.kind = CaseKind::CaseI;
  } else if (label.D_zero && !label.d2_zero) {
    label.kind = CaseKind::CaseII;
  } else if (label.D_zero && label.d2_zero && !label.d1_zero) {
    label.kind = CaseKind::CaseIII;
  } else if (!label.D_zero && !label.d2_zero) {
    label.kind = CaseKind::CaseIV;
  } else {
    label.kind = CaseKind::Degenerate;
    // All minors of [[p1,p2,p5],[p3,p4,p6]] vanish: the rows are
    // proportional, so the equation collapses to a single square.
    if (prob.p1.is_zero() && prob.p2.is_zero() && prob.p5.is_zero()) {
      label.note =
          "first form vanishes identically; equation reduces to "
          "(p3*L(f) + p4*f(z+c) + p6*f)^2 = p";
    } else {
      std::string lam;
      if (!prob.p1.is_zero()) lam = print_ratfn(ratfn_make(prob.p3, prob.p1));
      else if (!prob.p2.is_zero()) lam = print_ratfn(ratfn_make(prob.p4, prob.p2));
      else lam = print_ratfn(ratfn_make(prob.p6, prob.p5));
      label.note =
          "(p3,p4,p6) = lambda*(p1,p2,p5) with lambda = " + lam +
          "; equation reduces to (1 + lambda^2)*(p1*L(f) + p2*f(z+c) + p5*f)^2 = p, "
          "i.e. p1*L(f) + p2*f(z+c) + p5*f is a fixed square root of p/(1+lambda^2) "
          "(no exponential family; not constructed here)";
    }
  }
  return label;
}

ExpPoly bar(const PddeProblem& prob, const ExpPoly& f, int sign) {
  return ep_shift(f, prob.c, sign);
}

MultiPoly bar(const PddeProblem& prob, const MultiPoly& q, int sign) {
  return poly_shift(q, prob.c, sign);
}

static ExpPoly linear_form(const PddeProblem& prob, const MultiPoly& pl, const MultiPoly& pb,
                           const MultiPoly& pf, const ExpPoly& Lf, const ExpPoly& fbar,
                           const ExpPoly& f) {
  ExpPoly acc = ep_zero(prob.n);
  if (!pl.is_zero()) acc = ep_add(acc, ep_mul(ep_from_poly(pl), Lf));
  if (!pb.is_zero()) acc = ep_add(acc, ep_mul(ep_from_poly(pb), fbar));
  if (!pf.is_zero()) acc = ep_add(acc, ep_mul(ep_from_poly(pf), f));
  return acc;
}

ExpPoly form_X(const PddeProblem& prob, const ExpPoly& f) {
  return linear_form(prob, prob.p1, prob.p2, prob.p5, ep_apply_L(f, prob.L), bar(prob, f, +1), f);
}

ExpPoly form_Y(const PddeProblem& prob, const ExpPoly& f) {
  return linear_form(prob, prob.p3, prob.p4, prob.p6, ep_apply_L(f, prob.L), bar(prob, f, +1), f);
}

ExpPoly residual(const PddeProblem& prob, const ExpPoly& f) {
  if (f.n != prob.n) fail("ArityMismatch", "candidate arity differs from the problem");
  ExpPoly Lf = ep_apply_L(f, prob.L);
  ExpPoly fbar = bar(prob, f, +1);
  ExpPoly X = linear_form(prob, prob.p1, prob.p2, prob.p5, Lf, fbar, f);
  ExpPoly Y = linear_form(prob, prob.p3, prob.p4, prob.p6, Lf, fbar, f);
  ExpPoly R = ep_add(ep_mul(X, X), ep_mul(Y, Y));
  return ep_sub(R, ep_from_poly(prob.p));
}

Tri verify(const PddeProblem& prob, const ExpPoly& f) { return ep_is_zero(residual(prob, f)); }

// ---------------------------------------------------------------------------

MatrixEquation equivalence_transform(const std::array<MultiPoly, 6>& etas, const MultiPoly& eta,
                                     int k) {
  check_k(k);
  const MultiPoly &e1 = etas[0], &e2 = etas[1], &e3 = etas[2], &e4 = etas[3], &e5 = etas[4],
                  &e6 = etas[5];
  MatrixEquation me;
  me.k = k;
  me.xi0 = poly_sub(poly_mul(e1, e4), poly_mul(e2, e3));
  if (me.xi0.is_zero())
    fail("SingularXi0", "eta1*eta4 - eta2*eta3 is identically zero; no reduction");
  Scalar ks = Scalar::from_long(k);
  Scalar is = scalar_i();
  me.tau1 = poly_sub(poly_scale(ks, e1), poly_scale(is, e3));
  me.tau2 = poly_add(poly_scale(ks, e1), poly_scale(is, e3));
  me.zeta1 = poly_sub(poly_scale(ks, e2), poly_scale(is, e4));
  me.zeta2 = poly_add(poly_scale(ks, e2), poly_scale(is, e4));
  me.xi1 = poly_sub(poly_mul(e2, e6), poly_mul(e4, e5));
  me.xi2 = poly_sub(poly_mul(e3, e5), poly_mul(e1, e6));
  me.eta = eta;
  return me;
}

std::pair<ExpPoly, ExpPoly> matrix_solution(const MatrixEquation& me, const ExpPoly& g,
                                            const ExpPoly& u) {
  int n = me.xi0.n;
  ExpPoly Ep = ep_exp(g);
  ExpPoly Em = ep_exp(ep_neg(g));
  ExpPoly etaEm = ep_mul(ep_from_poly(me.eta), Em);
  // 2 i xi0 and xi0 are exponential-free, so division lands in coefficients.
  ExpPoly two_i_xi0 = ep_from_poly(poly_scale(scalar_mul(Scalar::from_long(2), scalar_i()), me.xi0));
  ExpPoly xi0 = ep_from_poly(me.xi0);
  ExpPoly s = ep_div(ep_add(ep_mul(ep_from_poly(poly_neg(me.zeta1)), Ep),
                            ep_mul(ep_from_poly(me.zeta2), etaEm)),
                     two_i_xi0);
  ExpPoly t = ep_div(ep_add(ep_mul(ep_from_poly(me.tau1), Ep),
                            ep_mul(ep_from_poly(poly_neg(me.tau2)), etaEm)),
                     two_i_xi0);
  if (!u.is_structural_zero()) {
    s = ep_add(s, ep_div(ep_mul(ep_from_poly(me.xi1), u), xi0));
    t = ep_add(t, ep_div(ep_mul(ep_from_poly(me.xi2), u), xi0));
  }
  (void)n;
  return {s, t};
}

ExpPoly transform_residual(const std::array<MultiPoly, 6>& etas, const MultiPoly& eta,
                           const ExpPoly& s, const ExpPoly& t, const ExpPoly& u) {
  auto form = [&](const MultiPoly& es, const MultiPoly& et, const MultiPoly& eu) {
    ExpPoly acc = ep_mul(ep_from_poly(es), s);
    acc = ep_add(acc, ep_mul(ep_from_poly(et), t));
    acc = ep_add(acc, ep_mul(ep_from_poly(eu), u));
    return acc;
  };
  ExpPoly A = form(etas[0], etas[1], etas[4]);
  ExpPoly B = form(etas[2], etas[3], etas[5]);
  return ep_sub(ep_add(ep_mul(A, A), ep_mul(B, B)), ep_from_poly(eta));
}

}  // namespace fermat
