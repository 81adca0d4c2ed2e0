#include "fermat/parse.hpp"

#include <cctype>

namespace fermat {

namespace {

class Parser {
 public:
  Parser(const std::string& s, int n) : s_(s), n_(n) {}

  ExpPoly run() {
    ExpPoly e = expr();
    skip_ws();
    if (pos_ != s_.size()) syntax(pos_, "unexpected character");
    return e;
  }

 private:
  const std::string& s_;
  int n_;
  std::size_t pos_ = 0;

  [[noreturn]] void syntax(std::size_t at, const std::string& msg) {
    fail("SyntaxError", msg + " at position " + std::to_string(at + 1));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  ExpPoly expr() {
    ExpPoly acc = term();
    for (;;) {
      if (eat('+')) {
        acc = ep_add(acc, term());
      } else if (eat('-')) {
        acc = ep_sub(acc, term());
      } else {
        return acc;
      }
    }
  }

  ExpPoly term() {
    ExpPoly acc = factor();
    for (;;) {
      skip_ws();
      std::size_t at = pos_;
      if (eat('*')) {
        acc = ep_mul(acc, factor());
      } else if (eat('/')) {
        ExpPoly d = factor();
        try {
          acc = ep_div(acc, d);
        } catch (const Error& e) {
          if (e.kind == "WrongShape")
            syntax(at, "division by an expression containing exponentials");
          throw;  // DivisionByZeroExpression passes through untouched
        }
      } else {
        return acc;
      }
    }
  }

  ExpPoly factor() {
    if (eat('-')) return ep_neg(factor());
    if (eat('+')) return factor();
    return power();
  }

  ExpPoly power() {
    ExpPoly base = atom();
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      std::size_t at = pos_;
      ++pos_;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '-') {
        fail("NegativePowerError",
             "negative exponent at position " + std::to_string(pos_ + 1));
      }
      if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_]))
        syntax(pos_, "expected a nonnegative integer exponent");
      unsigned long e = 0;
      while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
        e = e * 10 + (unsigned long)(s_[pos_] - '0');
        if (e > 1000000) syntax(at, "exponent too large");
        ++pos_;
      }
      if (ep_has_exponential_factor(base))
        syntax(at, "cannot raise an exponential expression to a power");
      return ep_pow(base, e);
    }
    return base;
  }

  ExpPoly atom() {
    skip_ws();
    if (pos_ >= s_.size()) syntax(pos_, "unexpected end of input");
    char c = s_[pos_];

    if (c == '(') {
      std::size_t at = pos_;
      ++pos_;
      ExpPoly e = expr();
      if (!eat(')')) syntax(pos_, "expected ')' for '(' at position " + std::to_string(at + 1));
      return e;
    }

    if (std::isdigit((unsigned char)c)) {
      std::string digits;
      while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) digits += s_[pos_++];
      return ep_from_scalar(n_, Scalar(GaussianRational(mpq_class(digits))));
    }

    if (std::isalpha((unsigned char)c)) {
      std::size_t at = pos_;
      std::string word;
      while (pos_ < s_.size() && std::isalpha((unsigned char)s_[pos_])) word += s_[pos_++];

      if (word == "i") return ep_from_scalar(n_, scalar_i());
      if (word == "pi") return ep_from_scalar(n_, scalar_pi());
      if (word == "z") {
        if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_]))
          syntax(pos_, "expected a variable index after 'z'");
        long idx = 0;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
          idx = idx * 10 + (s_[pos_] - '0');
          if (idx > 1000000) syntax(at, "variable index too large");
          ++pos_;
        }
        if (idx < 1 || idx > n_)
          fail("ArityError", "variable z" + std::to_string(idx) + " out of range for arity " +
                                 std::to_string(n_) + " (at position " + std::to_string(at + 1) + ")");
        return ep_var(n_, (int)idx);
      }
      if (word == "E" || word == "sin" || word == "cos") {
        if (!eat('(')) syntax(pos_, "expected '(' after '" + word + "'");
        ExpPoly arg = expr();
        if (!eat(')')) syntax(pos_, "expected ')' closing '" + word + "'");
        if (word == "E") return ep_exp(arg);
        ExpPoly plus = ep_exp(arg);
        ExpPoly minus = ep_exp(ep_neg(arg));
        if (word == "sin") {
          // (e^{i a} - e^{-i a}) / (2 i)
          return ep_scale(Scalar(GaussianRational(mpq_class(0), mpq_class(-1, 2))),
                          ep_sub(plus, minus));
        }
        return ep_scale(Scalar(GaussianRational(mpq_class(1, 2))), ep_add(plus, minus));
      }
      syntax(at, "unknown identifier '" + word + "'");
    }

    syntax(pos_, "unexpected character");
  }
};

// --- printing ---------------------------------------------------------------

// Does the string contain a '+' or '-' at parenthesis depth 0 beyond the
// first character?  Such strings need wrapping inside products.
bool has_toplevel_sum(const std::string& s) {
  int depth = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    char c = s[k];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if (depth == 0 && k > 0 && (c == '+' || c == '-')) return true;
  }
  return false;
}

std::string wrap_for_product(const std::string& s) {
  return has_toplevel_sum(s) ? "(" + s + ")" : s;
}

std::string join_sum(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (out.empty()) {
      out = p;
    } else if (!p.empty() && p[0] == '-') {
      // safe even when p has top-level sums: +/- are left-associative with
      // equal precedence, so "x - a + b" parses as x + (-a + b)
      out += " - ";
      out += p.substr(1);
    } else {
      out += " + ";
      out += p;
    }
  }
  return out.empty() ? "0" : out;
}

std::string rat_str(const mpq_class& q) { return q.get_str(); }

}  // namespace

std::string print_gr(const GaussianRational& g) {
  if (g.is_zero()) return "0";
  std::string im_part;
  if (g.im != 0) {
    if (g.im == 1) im_part = "i";
    else if (g.im == -1) im_part = "-i";
    else im_part = rat_str(g.im) + "*i";
  }
  if (g.re == 0) return im_part;
  if (g.im == 0) return rat_str(g.re);
  std::string out = rat_str(g.re);
  if (im_part[0] == '-') {
    out += " - ";
    out += im_part.substr(1);
  } else {
    out += " + ";
    out += im_part;
  }
  return out;
}

std::string print_scalar(const Scalar& s) {
  if (s.is_zero()) return "0";
  std::vector<std::string> parts;
  for (std::size_t m = s.c.size(); m-- > 0;) {
    const GaussianRational& q = s.c[m];
    if (q.is_zero()) continue;
    if (m == 0) {
      parts.push_back(print_gr(q));
      continue;
    }
    std::string pi_pow = m == 1 ? "pi" : "pi^" + std::to_string(m);
    std::string qs;
    if (q == GaussianRational(1L)) qs = "";
    else if (q == GaussianRational(-1L)) qs = "-";
    else qs = wrap_for_product(print_gr(q)) + "*";
    parts.push_back(qs + pi_pow);
  }
  return join_sum(parts);
}

std::string print_poly(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::string> parts;
  for (auto it = p.t.rbegin(); it != p.t.rend(); ++it) {
    const Exps& e = it->first;
    std::string vars;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "z" + std::to_string(j + 1);
      if (e[j] > 1) vars += "^" + std::to_string(e[j]);
    }
    if (vars.empty()) {
      parts.push_back(print_scalar(it->second));
    } else if (it->second == scalar_one()) {
      parts.push_back(vars);
    } else if (it->second == scalar_neg(scalar_one())) {
      parts.push_back("-" + vars);
    } else {
      parts.push_back(wrap_for_product(print_scalar(it->second)) + "*" + vars);
    }
  }
  return join_sum(parts);
}

std::string print_ratfn(const RationalFn& r) {
  if (ratfn_is_polynomial(r)) return print_poly(r.num);
  return "(" + print_poly(r.num) + ")/(" + print_poly(r.den) + ")";
}

std::string print_expr(const ExpPoly& e) {
  if (e.terms.empty()) return "0";
  std::vector<std::string> parts;
  for (const auto& t : e.terms) {
    bool has_exp = t.phase || !t.residual.is_zero();
    std::string cs = print_ratfn(t.coeff);
    if (!has_exp) {
      parts.push_back(cs);
      continue;
    }
    std::vector<std::string> arg;
    if (!t.residual.is_zero()) arg.push_back(print_scalar(t.residual));
    if (t.phase) arg.push_back(print_expr(*t.phase));
    std::string es = "E(" + join_sum(arg) + ")";
    if (cs == "1") parts.push_back(es);
    else if (cs == "-1") parts.push_back("-" + es);
    else parts.push_back(wrap_for_product(cs) + "*" + es);
  }
  return join_sum(parts);
}

ExpPoly parse_expr(const std::string& text, int n) {
  if (n < 1) fail("ArityMismatch", "arity must be at least 1");
  Parser p(text, n);
  return p.run();
}

}  // namespace fermat
