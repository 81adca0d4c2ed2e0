#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "common.hpp"
#include "fermat/parse.hpp"

using namespace fermat;
using fermat::testutil::ep;
using fermat::testutil::error_kind;

TEST_CASE("literals and sugar") {
  CHECK(ep_equal(ep("i*i"), ep("-1")));
  CHECK(ep_equal(ep("3/4 - 1/4"), ep("1/2")));
  CHECK(ep_equal(ep("+z1"), ep("z1")));
  CHECK(ep_equal(ep("- -z1"), ep("z1")));
  CHECK(ep_equal(ep("z1^0"), ep("1")));
  CHECK(ep_equal(ep("(z1 + z2)^2"), ep("z1^2 + 2*z1*z2 + z2^2")));
  CHECK(ep_equal(ep("sin(0)"), ep("0")));
  CHECK(ep_equal(ep("cos(0)"), ep("1")));
  CHECK(ep_equal(ep("sin(pi/2)"), ep("1")));
  CHECK(ep_equal(ep("cos(z1)"), ep("1/2*E(z1) + 1/2*E(-z1)")));
  // '^' needs an exponential-free base, so the classical identity is spelled
  // with explicit products
  CHECK(ep_is_zero(ep("sin(z1)*sin(z1) + cos(z1)*cos(z1) - 1")).verdict == Verdict::Zero);
  // whitespace is free
  CHECK(ep_equal(ep("  z1+ z2 *  i "), ep("z1 + i*z2")));
}

TEST_CASE("round trips: parse, print, parse again") {
  std::vector<std::string> exprs = {
      "0",
      "1",
      "-1/2*i",
      "pi^2 - i*pi + 1/7",
      "z1^3 - i*z2^2 + pi*z1",
      "(z1 - 1)*E(-z2) - 1/2*i*E(z2)",
      "1/2*E(z2) - i*(z1 - 1)*E(-z2)",
      "-i*E(z2 - z1*E(-2*z2))",
      "-i*E(-z2 + z1*E(2*z2))",
      "-1/2*i*E(-E(z2))",
      "E(z1 + E(z2))",
      "E(pi/3)*z1 - E(-z1 - z2 + 1/4*pi)",
      "(1/2 + 1/2*i)*E(z1^2*z2)",
      "z1/pi",
      "1/(z1*z2)",
      "-E(z2)",
      "E(z1*E(z2) + E(-z2))",
      "sin(z1 + z2^3 + 1)",
      "sin(z1 + z2 - pi)",
      "(z1^2 - z2)/(z1 + 1)*E(z1) + pi",
  };
  for (const auto& s : exprs) {
    CAPTURE(s);
    ExpPoly e1 = ep(s);
    std::string printed = print_expr(e1);
    CAPTURE(printed);
    ExpPoly e2 = ep(printed);
    CHECK(ep_equal(e1, e2));
    // printing a normal form is idempotent
    CHECK(print_expr(e2) == printed);
  }
}

TEST_CASE("syntax errors carry 1-based positions and never crash") {
  std::vector<std::string> bad = {
      "z1 + ", "(z1", "E(z1", "z1 ^", "1 + * 2", "", "foo(z1)", "z",
      "z1 @", "sin z1", "E(z1)^2", "..", "3..4", "z1 z2",
  };
  for (const auto& s : bad) {
    CAPTURE(s);
    bool threw = false;
    try {
      parse_expr(s, 2);
    } catch (const Error& e) {
      threw = true;
      CHECK(e.kind == "SyntaxError");
      CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
    CHECK(threw);
  }
  // positions are 1-based: '@' is the 4th character here
  try {
    parse_expr("z1 @", 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("position 4") != std::string::npos);
  }
}

TEST_CASE("typed parse errors") {
  CHECK(error_kind([] { parse_expr("z3", 2); }) == "ArityError");
  CHECK(error_kind([] { parse_expr("z1^-2", 2); }) == "NegativePowerError");
  CHECK(error_kind([] { parse_expr("1/0", 2); }) == "DivisionByZeroExpression");
  CHECK(error_kind([] { parse_expr("1/(E(z1) + 1)", 2); }) == "SyntaxError");
  // z3 is fine at arity 3
  CHECK(ep_equal(parse_expr("z3", 3), ep_var(3, 3)));
}

TEST_CASE("printer conventions") {
  CHECK(print_expr(ep("0")) == "0");
  CHECK(print_expr(ep("-z1")) == "-z1");
  CHECK(print_expr(ep("E(pi)")) == "-1");
  CHECK(print_expr(ep("E(z1)*E(-z1)")) == "1");
  // unit coefficients vanish from products
  CHECK(print_expr(ep("1*E(z1)")) == "E(z1)");
  CHECK(print_expr(ep("-1*E(z1)")) == "-E(z1)");
  // signs merge across term boundaries instead of printing "+ -"
  std::string s = print_expr(ep("E(-1 - z2^2 - z1)"));
  CHECK(s.find("+ -") == std::string::npos);
  std::string t = print_expr(ep("z1 - z2 - 1"));
  CHECK(t.find("+ -") == std::string::npos);
}
