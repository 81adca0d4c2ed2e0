#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "fermat/poly.hpp"

using namespace fermat;
using fermat::testutil::error_kind;
using fermat::testutil::pp;
using fermat::testutil::sc;

TEST_CASE("construction and basic arithmetic") {
  CHECK(poly_add(pp("z1^2"), pp("z2")) == pp("z1^2 + z2"));
  CHECK(poly_mul(pp("z1 + z2"), pp("z1 - z2")) == pp("z1^2 - z2^2"));
  CHECK(poly_sub(pp("z1*z2"), pp("z1*z2")).is_zero());
  CHECK(poly_scale(sc("i"), pp("z1")) == pp("i*z1"));
  CHECK(poly_neg(pp("z1 - 1")) == pp("1 - z1"));
  CHECK(poly_var(2, 1) == pp("z1"));
  CHECK(error_kind([] { poly_var(2, 3); }) == "BadIndex");
  CHECK(error_kind([] { poly_var(2, 0); }) == "BadIndex");
}

TEST_CASE("ring laws on a fixed sample") {
  std::vector<MultiPoly> xs = {pp("0"),        pp("1"),          pp("z1"),
                               pp("i*z2 - 1"), pp("z1^2 + z2"),  pp("pi*z1*z2"),
                               pp("3/4*z2^3 - i*z1")};
  for (const auto& a : xs)
    for (const auto& b : xs) {
      CHECK(poly_add(a, b) == poly_add(b, a));
      CHECK(poly_mul(a, b) == poly_mul(b, a));
      for (const auto& c : xs) {
        CHECK(poly_mul(a, poly_add(b, c)) == poly_add(poly_mul(a, b), poly_mul(a, c)));
        CHECK(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c)));
      }
    }
}

TEST_CASE("derivative") {
  CHECK(poly_derive(pp("z1^2*z2"), 1) == pp("2*z1*z2"));
  CHECK(poly_derive(pp("z1^2*z2"), 2) == pp("z1^2"));
  CHECK(poly_derive(pp("pi"), 1).is_zero());
  // product rule spot check
  MultiPoly a = pp("z1^2 + i*z2"), b = pp("z1*z2 - 3");
  CHECK(poly_derive(poly_mul(a, b), 1) ==
        poly_add(poly_mul(poly_derive(a, 1), b), poly_mul(a, poly_derive(b, 1))));
}

TEST_CASE("shift is substitution") {
  std::vector<Scalar> c = {sc("1"), sc("-i")};
  // (z1 + 1)^2 by hand
  CHECK(poly_shift(pp("z1^2"), c, +1) == pp("z1^2 + 2*z1 + 1"));
  CHECK(poly_shift(pp("z2"), c, +1) == pp("z2 - i"));
  // shift there and back is the identity
  std::vector<MultiPoly> xs = {pp("z1^3 - i*z2^2 + pi*z1"), pp("z1*z2"), pp("7")};
  for (const auto& a : xs) CHECK(poly_shift(poly_shift(a, c, +1), c, -1) == a);
  // substitution is a ring homomorphism
  MultiPoly a = pp("z1^2 - z2"), b = pp("i*z1 + z2^2");
  CHECK(poly_shift(poly_mul(a, b), c, +1) ==
        poly_mul(poly_shift(a, c, +1), poly_shift(b, c, +1)));
  CHECK(poly_shift(poly_add(a, b), c, -1) ==
        poly_add(poly_shift(a, c, -1), poly_shift(b, c, -1)));
  // pi-valued shifts matter for the phase folding downstream
  std::vector<Scalar> cpi = {sc("2*pi"), sc("0")};
  CHECK(poly_shift(pp("z1"), cpi, -1) == pp("z1 - 2*pi"));
}

TEST_CASE("degrees and constants") {
  CHECK(poly_degree_in(pp("z1^2*z2 + z2^4"), 1) == 2);
  CHECK(poly_degree_in(pp("z1^2*z2 + z2^4"), 2) == 4);
  CHECK(poly_total_degree(pp("z1^2*z2 + z2^4")) == 4);
  CHECK(poly_degree_in(pp("0"), 1) == kNegInfDegree);
  CHECK(poly_total_degree(pp("0")) == kNegInfDegree);
  CHECK(poly_is_constant(pp("pi + i")));
  CHECK(poly_is_constant(pp("0")));
  CHECK(!poly_is_constant(pp("z2")));
  CHECK(poly_constant_value(pp("pi + i")) == sc("pi + i"));
  CHECK(error_kind([] { poly_constant_value(pp("z1")); }) == "WrongShape");
}

TEST_CASE("exact division") {
  auto q = poly_divide_exact(pp("z1^2 - z2^2"), pp("z1 - z2"));
  REQUIRE(q.has_value());
  CHECK(*q == pp("z1 + z2"));
  CHECK(!poly_divide_exact(pp("z1^2 + z2"), pp("z1 - z2")).has_value());
  CHECK(poly_divide_exact(pp("0"), pp("z1"))->is_zero());
  // exactness over the coefficient ring, pi included
  MultiPoly a = pp("pi*z1^2 - i*z2 + 1"), b = pp("z1*z2 - pi");
  CHECK(*poly_divide_exact(poly_mul(a, b), b) == a);
}

TEST_CASE("evaluation") {
  auto v = poly_eval(pp("z1^2 + i*z2"), {{2.0, 0.0}, {0.0, 1.0}});
  // (2)^2 + i*(i) = 4 - 1 = 3
  CHECK(v.real() == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(v.imag() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("rational function normal form") {
  // exact cancellation through trial division
  RationalFn r = ratfn_make(pp("z1^2 - 1"), pp("z1 - 1"));
  CHECK(ratfn_is_polynomial(r));
  CHECK(r.num == pp("z1 + 1"));
  // monomial content is stripped
  RationalFn s = ratfn_make(pp("z1^2*z2"), pp("z1*z2^2"));
  CHECK(s.num == pp("z1"));
  CHECK(s.den == pp("z2"));
  // denominator scaled to leading coefficient 1 when pi-free
  RationalFn t = ratfn_make(pp("z1"), pp("2*i*z2"));
  CHECK(t.den == pp("z2"));
  CHECK(t.num == pp("-1/2*i*z1"));
  // zero keeps den = 1
  RationalFn z = ratfn_make(pp("0"), pp("z1^2"));
  CHECK(z.is_zero());
  CHECK(z.den == pp("1"));
  CHECK(error_kind([] { ratfn_make(pp("1"), pp("0")); }) == "DivisionByZeroExpression");
}

TEST_CASE("rational function arithmetic and equality") {
  RationalFn a = ratfn_make(pp("1"), pp("z1"));
  RationalFn b = ratfn_make(pp("1"), pp("z2"));
  RationalFn sum = ratfn_add(a, b);
  CHECK(sum == ratfn_make(pp("z1 + z2"), pp("z1*z2")));
  CHECK(ratfn_mul(a, b) == ratfn_make(pp("1"), pp("z1*z2")));
  CHECK(ratfn_sub(a, a).is_zero());
  // equality is cross-multiplication, independent of representation
  CHECK(ratfn_make(pp("z1"), pp("z1^2")) == ratfn_make(pp("1"), pp("z1")));
  CHECK(ratfn_make(pp("z1 + z2"), pp("z1^2 - z2^2")) == ratfn_make(pp("1"), pp("z1 - z2")));
  CHECK(error_kind([&] { ratfn_div(a, ratfn_zero(2)); }) == "DivisionByZeroExpression");
  // quotient rule
  RationalFn q = ratfn_make(pp("z2"), pp("z1"));
  CHECK(ratfn_derive(q, 1) == ratfn_make(pp("-z2"), pp("z1^2")));
  CHECK(ratfn_derive(q, 2) == ratfn_make(pp("1"), pp("z1")));
}

TEST_CASE("rational constancy is decided exactly") {
  CHECK(ratfn_is_constant(ratfn_make(pp("2*z1"), pp("4*z1"))));
  CHECK(*ratfn_constant_scalar(ratfn_make(pp("2*z1"), pp("4*z1"))) == sc("1/2"));
  CHECK(ratfn_is_constant(ratfn_make(pp("pi*z1*z2"), pp("z1*z2"))));
  CHECK(!ratfn_is_constant(ratfn_make(pp("z1"), pp("z2"))));
  // constant as a function, but its value lives outside Q(i)[pi]
  RationalFn inv_pi = ratfn_make(pp("z1"), pp("pi*z1"));
  CHECK(ratfn_is_constant(inv_pi));
  CHECK(!ratfn_constant_scalar(inv_pi).has_value());
  CHECK(ratfn_constant_scalar(ratfn_zero(2))->is_zero());
}

TEST_CASE("shift descends to rational functions") {
  std::vector<Scalar> c = {sc("i"), sc("1")};
  RationalFn q = ratfn_make(pp("z2"), pp("z1"));
  RationalFn qs = ratfn_shift(q, c, +1);
  CHECK(qs == ratfn_make(pp("z2 + 1"), pp("z1 + i")));
}
