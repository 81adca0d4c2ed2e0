#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstring>

#include "common.hpp"
#include "fermat/numeric.hpp"
#include "fermat/solvers.hpp"

using namespace fermat;
using fermat::testutil::ep;
using fermat::testutil::error_kind;

namespace {

PddeProblem fixture(const std::string& name) {
  return load_problem_file("problems/" + name);
}

bool same_bits(double a, double b) {
  return std::memcmp(&a, &b, sizeof a) == 0;
}

}  // namespace

TEST_CASE("pointwise evaluation") {
  using C = std::complex<double>;
  std::vector<C> z = {C(2.0, 0.0), C(0.0, 0.0)};
  CHECK(std::abs(eval_point(ep("z1^2 + 1"), z) - C(5.0, 0.0)) < 1e-12);
  // E(z1) = e^{i z1}; at z1 = 2 that is cos 2 + i sin 2
  CHECK(std::abs(eval_point(ep("E(z1)"), z) - C(std::cos(2.0), std::sin(2.0))) < 1e-12);
  // nested phase evaluates inside out
  C inner = std::exp(C(0.0, 1.0) * C(2.0, 0.0));
  CHECK(std::abs(eval_point(ep("E(E(z1))"), z) - std::exp(C(0.0, 1.0) * inner)) < 1e-12);
  // pi is a scalar, not a variable
  CHECK(std::abs(eval_point(ep("pi"), z) - C(3.14159265358979323846, 0.0)) < 1e-12);
  CHECK(error_kind([&] { eval_point(ep("1/z2"), z); }) == "PoleAtPoint");
}

TEST_CASE("spot check accepts the exact solution and rejects a perturbation") {
  PddeProblem prob = fixture("case1-variable-coeffs.json");
  ExpPoly f = ep("(z1 - 1)*E(-z2) - 1/2*i*E(z2)");
  SpotCheckReport rep = spot_check(prob, f, 100, 2.0);
  CHECK(rep.pass);
  CHECK(rep.evaluated == 100);
  CHECK(rep.pole_skips == 0);
  CHECK(rep.max_rel_error < 1e-9);

  SpotCheckReport bad = spot_check(prob, ep_add(f, ep_one(2)), 100, 2.0);
  CHECK(!bad.pass);
  CHECK(bad.max_rel_error > 1e-3);
}

TEST_CASE("spot check is deterministic and thread-count independent") {
  PddeProblem prob = fixture("case1-constant-coeffs.json");
  ExpPoly f = construct_case1(prob, ep("z1 + z2^3 + 1"), 1).f;
  SpotCheckReport a = spot_check(prob, f, 500, 2.0, 99);
  SpotCheckReport b = spot_check(prob, f, 500, 2.0, 99);
  CHECK(same_bits(a.max_rel_error, b.max_rel_error));
  SpotCheckReport s = spot_check_serial(prob, f, 500, 2.0, 99);
  CHECK(same_bits(a.max_rel_error, s.max_rel_error));
  CHECK(a.evaluated == s.evaluated);
  CHECK(a.pole_skips == s.pole_skips);
  // a different seed samples different points
  SpotCheckReport c = spot_check(prob, f, 500, 2.0, 100);
  CHECK(c.pass);
}

TEST_CASE("rational candidates resample around poles") {
  // f = 1/z1 is not entire, but the oracle can still probe it pointwise;
  // the polydisc draw hitting z1 ~ 0 is measure-zero so skips stay rare
  PddeProblem prob = load_problem(R"({"n": 2, "p1": "1", "p2": "1", "p3": "0",
    "p4": "1", "p": "1", "c": ["1", "0"], "L": [{"var": 1, "coeff": "1"}]})");
  SpotCheckReport rep = spot_check(prob, ep("1/(z1 - 100)"), 50, 2.0);
  // nothing explodes; the candidate is simply wrong for this equation
  CHECK(rep.evaluated == 50);
  CHECK(!rep.pass);
}

TEST_CASE("order estimation matches known growth") {
  OrderEstimate lin = estimate_order(ep("E(-z1)"), {}, 2048);
  CHECK(std::abs(lin.order() - 1.0) < 0.2);
  CHECK(!lin.exponential_free);
  CHECK(lin.radii.size() == 5);

  OrderEstimate cubic = estimate_order(ep("z1^3 + 2*z2 - 1"), {}, 2048);
  CHECK(cubic.exponential_free);
  CHECK(cubic.order() == 0.0);
  // the raw slope is the polynomial pitfall the shape gate exists for:
  // log+ of a cubic still grows with r, so the fitted slope is far from 0
  CHECK(cubic.slope > 0.1);

  OrderEstimate sq = estimate_order(ep("E(z2^2)"), {}, 2048);
  CHECK(std::abs(sq.order() - 2.0) < 0.3);
}

TEST_CASE("order estimation is deterministic") {
  OrderEstimate a = estimate_order(ep("E(z1 + z2^2)"), {4, 8, 16}, 512, 7);
  OrderEstimate b = estimate_order(ep("E(z1 + z2^2)"), {4, 8, 16}, 512, 7);
  OrderEstimate s = estimate_order_serial(ep("E(z1 + z2^2)"), {4, 8, 16}, 512, 7);
  REQUIRE(a.means.size() == 3);
  for (size_t i = 0; i < a.means.size(); ++i) {
    CHECK(same_bits(a.means[i], b.means[i]));
    CHECK(same_bits(a.means[i], s.means[i]));
  }
  CHECK(same_bits(a.slope, s.slope));
}

TEST_CASE("order estimation rejects non-entire shapes") {
  CHECK(error_kind([] { estimate_order(ep("1/z1")); }) == "NotEntireCandidate");
  CHECK(error_kind([] { estimate_order(ep("E(1/z1)")); }) == "NotEntireCandidate");
  // pi denominators are constants, not poles
  OrderEstimate ok = estimate_order(ep("E(z1/pi)"), {4, 8}, 256);
  CHECK(std::isfinite(ok.slope));
}

TEST_CASE("bad sampling parameters are schema errors") {
  CHECK(error_kind([] { estimate_order(ep("E(z1)"), {4}, 256); }) == "SchemaError");
  CHECK(error_kind([] { estimate_order(ep("E(z1)"), {4, 8}, 0); }) == "SchemaError");
  PddeProblem prob = fixture("case1-constant-coeffs.json");
  CHECK(error_kind([&] { spot_check(prob, ep("E(z1)"), 0, 2.0); }) == "SchemaError");
  CHECK(error_kind([&] { spot_check(prob, ep("E(z1)"), 10, -1.0); }) == "SchemaError");
}
