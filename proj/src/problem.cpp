#include "fermat/problem.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fermat/parse.hpp"

namespace fermat {

using nlohmann::json;

namespace {

MultiPoly parse_poly_field(const std::string& name, const std::string& text, int n) {
  ExpPoly e;
  try {
    e = parse_expr(text, n);
  } catch (const Error& err) {
    fail("SchemaError", "field '" + name + "': " + err.what());
  }
  auto r = ep_as_ratfn(e);
  if (!r || !ratfn_is_polynomial(*r))
    fail("SchemaError", "field '" + name + "' must be a polynomial expression");
  return r->num;
}

Scalar parse_scalar_field(const std::string& name, const std::string& text, int n) {
  ExpPoly e;
  try {
    e = parse_expr(text, n);
  } catch (const Error& err) {
    fail("SchemaError", "field '" + name + "': " + err.what());
  }
  auto r = ep_as_ratfn(e);
  if (!r) fail("SchemaError", "field '" + name + "' must be a constant");
  auto s = ratfn_constant_scalar(*r);
  if (!s) fail("SchemaError", "field '" + name + "' must be a constant in Q(i)[pi]");
  return *s;
}

std::string get_string(const json& j, const std::string& key, const char* dflt = nullptr) {
  if (!j.contains(key)) {
    if (dflt) return dflt;
    fail("SchemaError", "missing field '" + key + "'");
  }
  if (!j.at(key).is_string()) fail("SchemaError", "field '" + key + "' must be a string");
  return j.at(key).get<std::string>();
}

}  // namespace

PddeProblem load_problem(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const std::exception& e) {
    fail("SchemaError", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("SchemaError", "problem must be a JSON object");

  PddeProblem prob;
  if (!j.contains("n") || !j.at("n").is_number_integer())
    fail("SchemaError", "field 'n' must be an integer");
  prob.n = j.at("n").get<int>();
  if (prob.n < 1) fail("SchemaError", "arity n must be at least 1");

  prob.p1 = parse_poly_field("p1", get_string(j, "p1"), prob.n);
  prob.p2 = parse_poly_field("p2", get_string(j, "p2"), prob.n);
  prob.p3 = parse_poly_field("p3", get_string(j, "p3"), prob.n);
  prob.p4 = parse_poly_field("p4", get_string(j, "p4"), prob.n);
  prob.p5 = parse_poly_field("p5", get_string(j, "p5", "0"), prob.n);
  prob.p6 = parse_poly_field("p6", get_string(j, "p6", "0"), prob.n);
  prob.p = parse_poly_field("p", get_string(j, "p"), prob.n);
  if (prob.p.is_zero()) fail("ZeroCoefficientError", "right-hand side p is identically zero");

  if (!j.contains("c") || !j.at("c").is_array() || (int)j.at("c").size() != prob.n)
    fail("SchemaError", "field 'c' must be an array of n constant strings");
  bool all_zero = true;
  for (int t = 0; t < prob.n; ++t) {
    const auto& item = j.at("c").at(t);
    if (!item.is_string()) fail("SchemaError", "field 'c' entries must be strings");
    Scalar s = parse_scalar_field("c[" + std::to_string(t) + "]", item.get<std::string>(), prob.n);
    all_zero = all_zero && s.is_zero();
    prob.c.push_back(std::move(s));
  }
  if (all_zero) fail("ZeroShiftError", "shift vector c is zero");

  if (!j.contains("L") || !j.at("L").is_array() || j.at("L").empty())
    fail("SchemaError", "field 'L' must be a nonempty array of {var, coeff}");
  prob.L.n = prob.n;
  for (const auto& item : j.at("L")) {
    if (!item.is_object() || !item.contains("var") || !item.contains("coeff") ||
        !item.at("var").is_number_integer())
      fail("SchemaError", "entries of 'L' must be objects {var: int, coeff: string}");
    int var = item.at("var").get<int>();
    if (var < 1 || var > prob.n)
      fail("SchemaError", "operator variable index " + std::to_string(var) + " out of range");
    for (const auto& [v, q] : prob.L.parts)
      if (v == var) fail("SchemaError", "duplicate operator entry for variable " + std::to_string(var));
    if (!item.at("coeff").is_string()) fail("SchemaError", "operator coefficients must be strings");
    MultiPoly q = parse_poly_field("L.coeff", item.at("coeff").get<std::string>(), prob.n);
    if (q.is_zero())
      fail("ZeroCoefficientError", "operator coefficient for z" + std::to_string(var) + " is zero");
    prob.L.parts.emplace_back(var, std::move(q));
  }
  std::sort(prob.L.parts.begin(), prob.L.parts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  if (j.contains("assume_irreducible")) {
    if (!j.at("assume_irreducible").is_boolean())
      fail("SchemaError", "field 'assume_irreducible' must be a boolean");
    prob.assume_irreducible = j.at("assume_irreducible").get<bool>();
  }
  return prob;
}

PddeProblem load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("SchemaError", "cannot open problem file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_problem(buf.str());
}

IrredStatus p_irreducibility(const PddeProblem& prob) {
  int d = poly_total_degree(prob.p);
  if (d == 0) return IrredStatus::UnitConstant;
  if (d == 1) return IrredStatus::CertifiedLinear;
  // Univariate of degree >= 2 always splits over C.
  int used = 0;
  for (int jv = 1; jv <= prob.n; ++jv)
    if (poly_degree_in(prob.p, jv) > 0) ++used;
  if (used == 1) return IrredStatus::ReducibleUnivariate;
  return prob.assume_irreducible ? IrredStatus::Assumed : IrredStatus::Unchecked;
}

const char* irred_status_name(IrredStatus s) {
  switch (s) {
    case IrredStatus::UnitConstant: return "unit-constant";
    case IrredStatus::CertifiedLinear: return "certified-irreducible-linear";
    case IrredStatus::ReducibleUnivariate: return "reducible-univariate";
    case IrredStatus::Assumed: return "assumed-irreducible";
    case IrredStatus::Unchecked: return "unchecked";
  }
  return "?";
}

}  // namespace fermat
