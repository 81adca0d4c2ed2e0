#pragma once
// Small shortcuts shared by the test binaries.

#include <stdexcept>
#include <string>

#include "fermat/parse.hpp"
#include "fermat/problem.hpp"

namespace fermat::testutil {

inline ExpPoly ep(const std::string& s, int n = 2) { return parse_expr(s, n); }

inline MultiPoly pp(const std::string& s, int n = 2) {
  auto r = ep_as_ratfn(parse_expr(s, n));
  if (!r || !ratfn_is_polynomial(*r))
    throw std::runtime_error("test helper: not a polynomial: " + s);
  return r->num;
}

inline Scalar sc(const std::string& s) {
  auto r = ep_as_ratfn(parse_expr(s, 1));
  if (!r) throw std::runtime_error("test helper: not exponential-free: " + s);
  auto v = ratfn_constant_scalar(*r);
  if (!v) throw std::runtime_error("test helper: not a scalar: " + s);
  return *v;
}

// Run fn, return the kind tag of the Error it throws ("<none>" if it doesn't).
template <typename F>
std::string error_kind(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind;
  } catch (...) {
    return "<other>";
  }
  return "<none>";
}

}  // namespace fermat::testutil
