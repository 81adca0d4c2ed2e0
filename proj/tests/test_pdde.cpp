#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdint>
#include <string>

#include "common.hpp"
#include "fermat/pdde.hpp"
#include "fermat/parse.hpp"

using namespace fermat;
using fermat::testutil::ep;
using fermat::testutil::error_kind;
using fermat::testutil::pp;
using fermat::testutil::sc;

namespace {

PddeProblem fixture(const std::string& name) {
  return load_problem_file("problems/" + name);
}

// Tiny deterministic generator for the identity sweeps.
struct MiniRng {
  std::uint64_t s;
  explicit MiniRng(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t x = s;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }
  // small integer in [-3, 3]
  long coeff() { return (long)(next() % 7) - 3; }
};

MultiPoly random_poly(MiniRng& rng, int n) {
  MultiPoly acc = poly_zero(n);
  // degree <= 2 in two variables: constants plus a few monomials
  acc = poly_add(acc, poly_const(n, Scalar::from_long(rng.coeff())));
  acc = poly_add(acc, poly_scale(Scalar::from_long(rng.coeff()), poly_var(n, 1)));
  acc = poly_add(acc, poly_scale(Scalar::from_long(rng.coeff()), poly_var(n, 2)));
  acc = poly_add(acc, poly_scale(Scalar::from_long(rng.coeff()),
                                 poly_mul(poly_var(n, 1), poly_var(n, 2))));
  return acc;
}

}  // namespace

TEST_CASE("derived quantities, pinned values") {
  PddeProblem ex = fixture("case1-variable-coeffs.json");
  DerivedQuantities q = derive_quantities(ex, 1);
  CHECK(q.a1 == pp("4*i*z1"));
  CHECK(q.a2 == pp("-2*i*z1"));
  CHECK(q.b1.is_zero());
  CHECK(q.b2 == pp("2*i"));
  CHECK(q.D == pp("4*i*z1"));
  CHECK(q.d1.is_zero());
  CHECK(q.d2.is_zero());
  CHECK(q.bt1.is_zero());
  CHECK(q.bt2.is_zero());

  DerivedQuantities n1 = derive_quantities(fixture("case1-nested-a2b1-zero-k1.json"), 1);
  CHECK(n1.a1 == pp("2*z2"));
  CHECK(n1.a2.is_zero());
  CHECK(n1.b1.is_zero());
  CHECK(n1.b2 == pp("1"));
  CHECK(n1.D == pp("-i*z2"));

  DerivedQuantities n2 = derive_quantities(fixture("case1-nested-a2b1-zero-km1.json"), -1);
  CHECK(n2.a1 == pp("2*z2"));
  CHECK(n2.a2.is_zero());
  CHECK(n2.b1.is_zero());
  CHECK(n2.b2 == pp("1"));
  CHECK(n2.D == pp("i*z2"));
}

TEST_CASE("derived-quantity identities on random draws") {
  MiniRng rng(7);
  for (int iter = 0; iter < 20; ++iter) {
    PddeProblem prob;
    prob.n = 2;
    prob.p1 = random_poly(rng, 2);
    prob.p2 = random_poly(rng, 2);
    prob.p3 = random_poly(rng, 2);
    prob.p4 = random_poly(rng, 2);
    prob.p5 = random_poly(rng, 2);
    prob.p6 = random_poly(rng, 2);
    for (int k : {1, -1}) {
      DerivedQuantities q = derive_quantities(prob, k);
      // D = k (a1 b2 - a2 b1) / (2i)
      MultiPoly rhs = poly_scale(
          k == 1 ? sc("-1/2*i") : sc("1/2*i"),
          poly_sub(poly_mul(q.a1, q.b2), poly_mul(q.a2, q.b1)));
      CHECK(q.D == rhs);
      // a1 a2 = p1^2 + p3^2, and likewise down the rows
      CHECK(poly_mul(q.a1, q.a2) ==
            poly_add(poly_mul(prob.p1, prob.p1), poly_mul(prob.p3, prob.p3)));
      CHECK(poly_mul(q.b1, q.b2) ==
            poly_add(poly_mul(prob.p2, prob.p2), poly_mul(prob.p4, prob.p4)));
      CHECK(poly_mul(q.bt1, q.bt2) ==
            poly_add(poly_mul(prob.p5, prob.p5), poly_mul(prob.p6, prob.p6)));
      // d1, d2 are k-independent minors
      CHECK(q.d1 == poly_sub(poly_mul(prob.p2, prob.p6), poly_mul(prob.p4, prob.p5)));
      CHECK(q.d2 == poly_sub(poly_mul(prob.p3, prob.p5), poly_mul(prob.p1, prob.p6)));
    }
  }
}

TEST_CASE("classification of the fixture corpus") {
  auto label = [](const std::string& f) { return classify(fixture(f)); };

  CHECK(label("case1-variable-coeffs.json").kind == CaseKind::CaseI);
  CHECK(label("case1-constant-coeffs.json").kind == CaseKind::CaseI);
  CHECK(label("case1-nested-a2b1-zero-k1.json").kind == CaseKind::CaseI);
  CHECK(label("case1-nested-a2b1-zero-km1.json").kind == CaseKind::CaseI);
  CHECK(label("case1-nested-a1b2-zero-k1.json").kind == CaseKind::CaseI);
  CHECK(label("case1-nested-a1b2-zero-km1.json").kind == CaseKind::CaseI);
  CHECK(label("sine-shape.json").kind == CaseKind::CaseI);
  CHECK(label("case2-pure-derivative.json").kind == CaseKind::CaseII);
  CHECK(label("case3-exp-phase.json").kind == CaseKind::CaseIII);
  CHECK(label("case3-mixed-phase.json").kind == CaseKind::CaseIII);
  CHECK(label("case4-invertible.json").kind == CaseKind::CaseIV);
  CHECK(label("case4-singular.json").kind == CaseKind::CaseIV);

  CaseLabel one = label("case1-variable-coeffs.json");
  CHECK(!one.D_zero);
  CHECK(one.d1_zero);
  CHECK(one.d2_zero);
  CHECK(one.note.empty());

  CaseLabel deg = label("degenerate-proportional.json");
  CHECK(deg.kind == CaseKind::Degenerate);
  CHECK(deg.D_zero);
  CHECK(deg.d1_zero);
  CHECK(deg.d2_zero);
  CHECK(!deg.note.empty());

  CHECK(std::string(case_name(CaseKind::CaseIII)) == "III");
  CHECK(std::string(case_name(CaseKind::Degenerate)) == "degenerate");
}

TEST_CASE("shift operators respect the sign convention") {
  PddeProblem ex = fixture("case1-variable-coeffs.json");  // c = (1, 0)
  CHECK(bar(ex, pp("z1"), +1) == pp("z1 + 1"));
  CHECK(bar(ex, pp("z1"), -1) == pp("z1 - 1"));
  CHECK(bar(ex, pp("z2"), +1) == pp("z2"));
  CHECK(ep_equal(bar(ex, ep("E(z1)"), +1), ep("E(z1 + 1)")));
  CHECK(ep_equal(bar(ex, ep("E(z1)"), -1), ep("E(z1 - 1)")));

  PddeProblem pi_shift = fixture("case1-constant-coeffs.json");  // c = (2*pi, 0)
  CHECK(ep_equal(bar(pi_shift, ep("E(z1/2)"), +1), ep("-E(z1/2)")));
}

TEST_CASE("verification of known solutions") {
  PddeProblem ex = fixture("case1-variable-coeffs.json");
  ExpPoly f = ep("(z1 - 1)*E(-z2) - 1/2*i*E(z2)");
  CHECK(verify(ex, f).verdict == Verdict::Zero);
  CHECK(verify(ex, ep_add(f, ep_one(2))).verdict == Verdict::NonZero);

  // swapped companion family for the same equation
  ExpPoly fstar = ep("1/2*E(z2) - i*(z1 - 1)*E(-z2)");
  CHECK(verify(ex, fstar).verdict == Verdict::Zero);

  // X and Y are the actual forms: X^2 + Y^2 - p collapses
  ExpPoly lhs = ep_add(ep_pow(form_X(ex, f), 2), ep_pow(form_Y(ex, f), 2));
  CHECK(ep_is_zero(ep_sub(lhs, ep_from_poly(ex.p))).verdict == Verdict::Zero);
  CHECK(ep_is_zero(residual(ex, f)).verdict == Verdict::Zero);
}

TEST_CASE("general quadratic transform solves its system") {
  std::array<MultiPoly, 6> etas = {pp("1"),  pp("z1"), pp("z2"),
                                   pp("1"),  pp("1"),  pp("0")};
  MultiPoly eta = pp("z1^2 + 1");
  for (int k : {1, -1}) {
    MatrixEquation me = equivalence_transform(etas, eta, k);
    CHECK(me.xi0 == pp("1 - z1*z2"));
    ExpPoly g = ep("z1 + z2^2");
    ExpPoly u = ep("E(z2)");
    auto [s, t] = matrix_solution(me, g, u);
    CHECK(ep_is_zero(transform_residual(etas, eta, s, t, u)).verdict == Verdict::Zero);
    // u enters linearly: a different u still satisfies the system
    auto [s2, t2] = matrix_solution(me, g, ep_zero(2));
    CHECK(ep_is_zero(transform_residual(etas, eta, s2, t2, ep_zero(2))).verdict ==
          Verdict::Zero);
  }
}

TEST_CASE("transform rejects singular leading minor") {
  std::array<MultiPoly, 6> etas = {pp("1"), pp("1"), pp("1"),
                                   pp("1"), pp("0"), pp("0")};
  CHECK(error_kind([&] { equivalence_transform(etas, pp("1"), 1); }) == "SingularXi0");
}

TEST_CASE("problem loading and schema errors") {
  PddeProblem ok = load_problem(R"({
    "n": 2,
    "p1": "1", "p2": "1", "p3": "0", "p4": "1", "p": "z1 + 1",
    "c": ["1", "0"],
    "L": [{"var": 1, "coeff": "1"}]
  })");
  CHECK(ok.n == 2);
  CHECK(ok.p5.is_zero());
  CHECK(ok.p6.is_zero());
  CHECK(ok.c[0] == sc("1"));
  CHECK(ok.L.parts.size() == 1);
  CHECK(!ok.assume_irreducible);

  CHECK(error_kind([] {
          load_problem(R"({"n": 2, "p1": "1", "p2": "1", "p3": "0", "p4": "1",
                           "p": "1", "c": ["0", "0"],
                           "L": [{"var": 1, "coeff": "1"}]})");
        }) == "ZeroShiftError");
  CHECK(error_kind([] {
          load_problem(R"({"n": 2, "p1": "1", "p2": "1", "p3": "0", "p4": "1",
                           "p": "0", "c": ["1", "0"],
                           "L": [{"var": 1, "coeff": "1"}]})");
        }) == "ZeroCoefficientError");
  CHECK(error_kind([] {
          load_problem(R"({"n": 2, "p1": "1", "p2": "1", "p3": "0", "p4": "1",
                           "p": "1", "c": ["1", "0"],
                           "L": [{"var": 1, "coeff": "0"}]})");
        }) == "ZeroCoefficientError");
  CHECK(error_kind([] {
          load_problem(R"({"n": 2, "p1": "1", "p2": "1", "p3": "0", "p4": "1",
                           "p": "1", "c": ["1"],
                           "L": [{"var": 1, "coeff": "1"}]})");
        }) == "SchemaError");
  CHECK(error_kind([] { load_problem("{\"n\": 2}"); }) == "SchemaError");
  CHECK(error_kind([] { load_problem("not json at all"); }) == "SchemaError");
  // shift components must be constants
  CHECK(error_kind([] {
          load_problem(R"({"n": 2, "p1": "1", "p2": "1", "p3": "0", "p4": "1",
                           "p": "1", "c": ["z1", "0"],
                           "L": [{"var": 1, "coeff": "1"}]})");
        }) == "SchemaError");
}

TEST_CASE("irreducibility reporting stays honest") {
  CHECK(p_irreducibility(fixture("case1-variable-coeffs.json")) ==
        IrredStatus::CertifiedLinear);
  CHECK(p_irreducibility(fixture("case1-constant-coeffs.json")) ==
        IrredStatus::UnitConstant);

  auto with_p = [](const std::string& p, bool assume) {
    std::string flag = assume ? "true" : "false";
    return load_problem(std::string(R"({"n": 2, "p1": "1", "p2": "1", "p3": "0",
      "p4": "1", "c": ["1", "0"], "L": [{"var": 1, "coeff": "1"}],
      "assume_irreducible": )") + flag + R"(, "p": ")" + p + "\"}");
  };
  // univariate nonlinear p always splits over C
  CHECK(p_irreducibility(with_p("z1^2 + 1", false)) == IrredStatus::ReducibleUnivariate);
  CHECK(p_irreducibility(with_p("z1*z2 + 1", false)) == IrredStatus::Unchecked);
  CHECK(p_irreducibility(with_p("z1*z2 + 1", true)) == IrredStatus::Assumed);
  CHECK(std::string(irred_status_name(IrredStatus::Assumed)) == "assumed-irreducible");
}
