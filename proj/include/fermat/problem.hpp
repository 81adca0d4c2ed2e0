#pragma once
// Problem description: the equation
//
//   (p1 L(f) + p2 f(z+c) + p5 f)^2 + (p3 L(f) + p4 f(z+c) + p6 f)^2 = p
//
// on C^n, with polynomial coefficients p1..p6, p, a nonzero shift c with
// components in Q(i)[pi], and L = sum_j q_j d/dz_j a linear partial
// differential operator with nonzero polynomial coefficients.
//
// Loaded from JSON with fields:
//   n                  int >= 1
//   p1,p2,p3,p4,p      strings (polynomial expressions)
//   p5,p6              strings, optional, default "0"
//   c                  array of n strings, each a constant in Q(i)[pi]
//   L                  array of { "var": 1-based int, "coeff": string }
//   assume_irreducible optional bool (trust flag for p), default false
//
// Errors: SchemaError (structure/type/shape problems), ZeroShiftError (c = 0),
// ZeroCoefficientError (some q_j = 0 or p = 0).

#include <string>

#include "fermat/exppoly.hpp"

namespace fermat {

struct PddeProblem {
  int n = 0;
  MultiPoly p1, p2, p3, p4, p5, p6, p;
  std::vector<Scalar> c;
  DiffOp L;
  bool assume_irreducible = false;
};

PddeProblem load_problem(const std::string& json_text);
PddeProblem load_problem_file(const std::string& path);

// What we can honestly say about p's irreducibility over C[z1..zn].
enum class IrredStatus {
  UnitConstant,        // deg 0: a unit, the factorization argument is trivial
  CertifiedLinear,     // total degree 1: irreducible
  ReducibleUnivariate, // univariate of degree >= 2: splits over C
  Assumed,             // trust flag set
  Unchecked,           // trust flag not set, nothing certified
};

IrredStatus p_irreducibility(const PddeProblem& prob);
const char* irred_status_name(IrredStatus s);

}  // namespace fermat
