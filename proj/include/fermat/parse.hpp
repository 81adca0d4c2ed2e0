#pragma once
// Text form of expressions, both directions.
//
// Grammar (whitespace-insensitive):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ('+'|'-') factor | power
//   power  := atom ('^' nonneg-integer)?
//   atom   := integer | 'i' | 'pi' | 'z'<index> | 'E' '(' expr ')'
//           | 'sin' '(' expr ')' | 'cos' '(' expr ')' | '(' expr ')'
//
// E(phi) denotes e^{i*phi}; sin and cos expand to their exponential forms.
// Rationals are spelled with the division operator (e.g. 3/4), which is also
// how division by any exponential-free expression is written.  Exponents are
// literal nonnegative integers on exponential-free bases.
//
// Errors: SyntaxError (with 1-based position), ArityError for out-of-range
// variables, NegativePowerError for a negative exponent literal.
//
// print_expr emits the canonical text of a normal form; parsing it back
// yields the identical normal form (round-trip identity).

#include <string>

#include "fermat/exppoly.hpp"

namespace fermat {

ExpPoly parse_expr(const std::string& text, int n);

std::string print_expr(const ExpPoly& e);
std::string print_ratfn(const RationalFn& r);
std::string print_poly(const MultiPoly& p);
std::string print_scalar(const Scalar& s);
std::string print_gr(const GaussianRational& g);

}  // namespace fermat
