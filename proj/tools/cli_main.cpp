// Command-line front end.  Output is "key = value" records, blank-line
// separated; exit codes encode verdicts (0 zero/pass, 1 nonzero/fail,
// 2 unknown, 3 bad input or usage).

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "fermat/numeric.hpp"
#include "fermat/parse.hpp"
#include "fermat/problem.hpp"
#include "fermat/solvers.hpp"

using namespace fermat;

namespace {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Zero: return "Zero";
    case Verdict::NonZero: return "NonZero";
    default: return "Unknown";
  }
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Zero: return 0;
    case Verdict::NonZero: return 1;
    default: return 2;
  }
}

const char* shape_name(Shape s) {
  switch (s) {
    case Shape::Constant: return "constant";
    case Shape::PolynomialNonConstant: return "polynomial";
    default: return "transcendental";
  }
}

const char* bool_name(bool b) { return b ? "true" : "false"; }

std::string degree_name(int d) {
  return d == kNegInfDegree ? std::string("-inf") : std::to_string(d);
}

std::vector<int> pick_ks(const std::string& kopt) {
  if (kopt == "1") return {1};
  if (kopt == "-1") return {-1};
  return {1, -1};
}

void print_tri(const std::string& key, const Tri& t) {
  std::cout << key << " = " << verdict_name(t.verdict) << "\n";
  if (t.verdict == Verdict::Unknown && !t.offending.is_structural_zero())
    std::cout << key << "_blockers = " << print_expr(t.offending) << "\n";
}

int run_classify(const std::string& problem_path) {
  PddeProblem prob = load_problem_file(problem_path);
  CaseLabel label = classify(prob);
  std::cout << "case = " << case_name(label.kind) << "\n";
  std::cout << "D_zero = " << bool_name(label.D_zero) << "\n";
  std::cout << "d1_zero = " << bool_name(label.d1_zero) << "\n";
  std::cout << "d2_zero = " << bool_name(label.d2_zero) << "\n";
  if (!label.note.empty()) std::cout << "note = " << label.note << "\n";
  std::cout << "p_irreducibility = " << irred_status_name(p_irreducibility(prob)) << "\n";
  return 0;
}

int run_derive(const std::string& problem_path, const std::string& kopt) {
  PddeProblem prob = load_problem_file(problem_path);
  bool first = true;
  for (int k : pick_ks(kopt)) {
    if (!first) std::cout << "\n";
    first = false;
    DerivedQuantities q = derive_quantities(prob, k);
    std::cout << "k = " << k << "\n";
    std::cout << "a1 = " << print_poly(q.a1) << "\n";
    std::cout << "a2 = " << print_poly(q.a2) << "\n";
    std::cout << "b1 = " << print_poly(q.b1) << "\n";
    std::cout << "b2 = " << print_poly(q.b2) << "\n";
    std::cout << "bt1 = " << print_poly(q.bt1) << "\n";
    std::cout << "bt2 = " << print_poly(q.bt2) << "\n";
    std::cout << "d1 = " << print_poly(q.d1) << "\n";
    std::cout << "d2 = " << print_poly(q.d2) << "\n";
    std::cout << "D = " << print_poly(q.D) << "\n";
  }
  return 0;
}

int run_verify(const std::string& problem_path, const std::string& f_text) {
  PddeProblem prob = load_problem_file(problem_path);
  ExpPoly f = parse_expr(f_text, prob.n);
  ExpPoly res = residual(prob, f);
  Tri t = ep_is_zero(res);
  std::cout << "residual = " << print_expr(res) << "\n";
  print_tri("verdict", t);
  return verdict_exit(t.verdict);
}

int run_transform(const std::string& problem_path, const std::string& g_text,
                  const std::string& u_text, const std::string& kopt) {
  PddeProblem prob = load_problem_file(problem_path);
  std::array<MultiPoly, 6> etas = {prob.p1, prob.p2, prob.p3, prob.p4, prob.p5, prob.p6};
  ExpPoly g = parse_expr(g_text, prob.n);
  ExpPoly u = parse_expr(u_text, prob.n);
  int rc = 3;
  bool first = true;
  for (int k : pick_ks(kopt)) {
    if (!first) std::cout << "\n";
    first = false;
    MatrixEquation me = equivalence_transform(etas, prob.p, k);
    auto [s, t] = matrix_solution(me, g, u);
    ExpPoly res = transform_residual(etas, prob.p, s, t, u);
    Tri verdict = ep_is_zero(res);
    std::cout << "k = " << k << "\n";
    std::cout << "xi0 = " << print_poly(me.xi0) << "\n";
    std::cout << "s = " << print_expr(s) << "\n";
    std::cout << "t = " << print_expr(t) << "\n";
    print_tri("verdict", verdict);
    rc = std::min(rc, verdict_exit(verdict.verdict));
  }
  return rc;
}

void print_candidate(const SolutionCandidate& cand) {
  std::cout << "family = " << cand.family << "\n";
  std::cout << "f = " << print_expr(cand.f) << "\n";
  std::cout << "g = " << print_expr(cand.g) << "\n";
  std::cout << "description = " << cand.description << "\n";
  print_tri("verified", cand.verified);
}

int run_construct(const std::string& problem_path, const std::string& g_text,
                  const std::string& kopt, const std::string& case_opt,
                  const std::string& family, const std::string& gstar_text, int sign,
                  const std::string& f_text) {
  PddeProblem prob = load_problem_file(problem_path);
  int rc = 3;
  bool first = true;
  for (int k : pick_ks(kopt)) {
    if (!first) std::cout << "\n";
    first = false;
    std::cout << "k = " << k << "\n";
    if (family == "sine") {
      if (g_text.empty()) fail("SchemaError", "--family sine needs --g");
      ExpPoly g = parse_expr(g_text, prob.n);
      SineCandidate sc = construct_sine(prob, g, k);
      print_candidate(sc.cand);
      print_tri("slope_condition", sc.slope_condition);
      print_tri("plus_condition", sc.plus_condition);
      print_tri("minus_condition", sc.minus_condition);
      rc = std::min(rc, verdict_exit(sc.cand.verified.verdict));
      continue;
    }
    if (family == "linear-phase") {
      if (gstar_text.empty()) fail("SchemaError", "--family linear-phase needs --gstar");
      ExpPoly gstar = parse_expr(gstar_text, prob.n);
      LinearPhaseCandidate lp = construct_linear_phase(prob, gstar, k, sign);
      print_candidate(lp.cand);
      std::cout << "A = " << print_gr(lp.A) << "\n";
      print_tri("ratio_condition", lp.ratio_condition);
      if (!lp.ratio_note.empty()) std::cout << "ratio_note = " << lp.ratio_note << "\n";
      rc = std::min(rc, verdict_exit(lp.cand.verified.verdict));
      continue;
    }
    if (g_text.empty()) fail("SchemaError", "case construction needs --g");
    ExpPoly g = parse_expr(g_text, prob.n);
    CaseKind kind = classify(prob).kind;
    if (case_opt == "1") kind = CaseKind::CaseI;
    else if (case_opt == "2") kind = CaseKind::CaseII;
    else if (case_opt == "3") kind = CaseKind::CaseIII;
    else if (case_opt == "4") kind = CaseKind::CaseIV;
    std::cout << "case = " << case_name(kind) << "\n";
    switch (kind) {
      case CaseKind::CaseI: {
        SolutionCandidate cand = construct_case1(prob, g, k);
        print_candidate(cand);
        rc = std::min(rc, verdict_exit(cand.verified.verdict));
        break;
      }
      case CaseKind::CaseII: {
        SolutionCandidate cand = construct_case2(prob, g, k);
        print_candidate(cand);
        rc = std::min(rc, verdict_exit(cand.verified.verdict));
        break;
      }
      case CaseKind::CaseIII: {
        SolutionCandidate cand = construct_case3(prob, g, k);
        print_candidate(cand);
        rc = std::min(rc, verdict_exit(cand.verified.verdict));
        break;
      }
      case CaseKind::CaseIV: {
        std::optional<ExpPoly> f0;
        if (!f_text.empty()) f0 = parse_expr(f_text, prob.n);
        Case4Result r = construct_case4(prob, g, k, f0);
        std::cout << "A11 = " << print_ratfn(r.A11) << "\n";
        std::cout << "A12 = " << print_ratfn(r.A12) << "\n";
        std::cout << "A21 = " << print_ratfn(r.A21) << "\n";
        std::cout << "A22 = " << print_ratfn(r.A22) << "\n";
        std::cout << "detA = " << print_ratfn(r.detA) << "\n";
        std::cout << "invertible = " << bool_name(r.invertible) << "\n";
        std::cout << "description = " << r.description << "\n";
        if (r.candidate) {
          print_candidate(*r.candidate);
          rc = std::min(rc, verdict_exit(r.candidate->verified.verdict));
        } else if (r.relations) {
          Tri t1 = ep_is_zero(r.relations->rel1);
          Tri t2 = ep_is_zero(r.relations->rel2);
          std::cout << "rel1 = " << print_expr(r.relations->rel1) << "\n";
          print_tri("rel1_verdict", t1);
          std::cout << "rel2 = " << print_expr(r.relations->rel2) << "\n";
          print_tri("rel2_verdict", t2);
          rc = std::min(rc, std::max(verdict_exit(t1.verdict), verdict_exit(t2.verdict)));
        } else {
          rc = std::min(rc, 2);  // nothing to verify without a candidate f
        }
        break;
      }
      default:
        fail("WrongCase", "problem is degenerate; no constructor applies");
    }
  }
  return rc;
}

int run_check_properties(const std::string& problem_path, const std::string& g_text,
                         const std::string& kopt) {
  PddeProblem prob = load_problem_file(problem_path);
  ExpPoly g = parse_expr(g_text, prob.n);
  bool first = true;
  for (int k : pick_ks(kopt)) {
    if (!first) std::cout << "\n";
    first = false;
    PropertyReport rep = check_g_properties(prob, g, k);
    std::cout << "k = " << k << "\n";
    std::cout << "case = " << case_name(rep.kind) << "\n";
    std::cout << "refined = " << bool_name(rep.refined) << "\n";
    std::cout << "clause = " << rep.clause << "\n";
    std::cout << "g_shape = " << shape_name(rep.g_shape) << "\n";
    if (rep.L_g_shape) {
      std::cout << "L_shape = " << shape_name(*rep.L_g_shape) << "\n";
      std::cout << "L_zero = " << bool_name(rep.L_g_zero) << "\n";
      std::cout << "L_polynomial = " << bool_name(rep.L_g_polynomial) << "\n";
    }
    if (rep.plus_shape) std::cout << "plus_shape = " << shape_name(*rep.plus_shape) << "\n";
    if (rep.minus_shape) std::cout << "minus_shape = " << shape_name(*rep.minus_shape) << "\n";
    std::cout << "plus_constant = " << bool_name(rep.g_plus_shift_constant) << "\n";
    std::cout << "minus_constant = " << bool_name(rep.g_minus_shift_constant) << "\n";
    std::cout << "a1_b2_zero = " << bool_name(rep.a1_b2_zero) << "\n";
    std::cout << "a2_b1_zero = " << bool_name(rep.a2_b1_zero) << "\n";
    std::cout << "a1a2_nonzero = " << bool_name(rep.a1a2_nonzero) << "\n";
    if (rep.degree) {
      const auto& dd = *rep.degree;
      std::cout << "degree_variable = " << dd.j << "\n";
      std::cout << "degree_g = " << degree_name(dd.deg_g) << "\n";
      std::cout << "degree_a1 = " << degree_name(dd.deg_a1) << "\n";
      std::cout << "degree_a2 = " << degree_name(dd.deg_a2) << "\n";
      std::cout << "degree_b1 = " << degree_name(dd.deg_b1) << "\n";
      std::cout << "degree_b2 = " << degree_name(dd.deg_b2) << "\n";
      std::cout << "pair1 = " << (dd.pair1_applicable ? bool_name(dd.pair1_holds) : "n/a")
                << "\n";
      std::cout << "pair2 = " << (dd.pair2_applicable ? bool_name(dd.pair2_holds) : "n/a")
                << "\n";
    }
    for (const auto& note : rep.notes) std::cout << "note = " << note << "\n";
  }
  return 0;
}

int run_check_iff(const std::string& problem_path, const std::string& g_text,
                  const std::string& kopt) {
  PddeProblem prob = load_problem_file(problem_path);
  std::optional<ExpPoly> g;
  if (!g_text.empty()) g = parse_expr(g_text, prob.n);
  bool first = true;
  for (int k : pick_ks(kopt)) {
    if (!first) std::cout << "\n";
    first = false;
    IffReport rep = check_iff_conditions(prob, k, g);
    std::cout << "k = " << k << "\n";
    std::cout << "a2_b1_zero = " << bool_name(rep.a2_b1_zero) << "\n";
    std::cout << "a1_b2_zero = " << bool_name(rep.a1_b2_zero) << "\n";
    std::cout << "bt1_b2_zero = " << bool_name(rep.bt1_b2_zero) << "\n";
    std::cout << "bt2_b1_zero = " << bool_name(rep.bt2_b1_zero) << "\n";
    for (const auto& id : rep.identities) {
      if (!id.fires) continue;
      std::cout << "\n";
      std::cout << "identity = " << id.name << "\n";
      std::cout << "sides_ok = " << bool_name(id.sides_ok) << "\n";
      for (const auto& s : id.side_notes) std::cout << "side_note = " << s << "\n";
      if (id.identity) std::cout << "identity_expr = " << print_expr(*id.identity) << "\n";
      if (id.identity_verdict) print_tri("identity_verdict", *id.identity_verdict);
      if (id.candidate_f) std::cout << "candidate_f = " << print_expr(*id.candidate_f) << "\n";
      if (id.candidate_verdict) print_tri("candidate_verdict", *id.candidate_verdict);
    }
  }
  return 0;
}

int run_spot_check(const std::string& problem_path, const std::string& f_text, int points,
                   double radius, std::uint64_t seed, bool serial) {
  PddeProblem prob = load_problem_file(problem_path);
  ExpPoly f = parse_expr(f_text, prob.n);
  SpotCheckReport rep = serial ? spot_check_serial(prob, f, points, radius, seed)
                               : spot_check(prob, f, points, radius, seed);
  std::cout << "points = " << rep.points << "\n";
  std::cout << "evaluated = " << rep.evaluated << "\n";
  std::cout << "pole_skips = " << rep.pole_skips << "\n";
  std::printf("max_rel_error = %.6e\n", rep.max_rel_error);
  std::printf("tol = %.1e\n", rep.tol);
  std::cout << "pass = " << bool_name(rep.pass) << "\n";
  return rep.pass ? 0 : 1;
}

int run_estimate_order(const std::string& problem_path, const std::string& f_text, int n,
                       const std::vector<double>& radii, int samples, std::uint64_t seed,
                       bool serial) {
  if (!problem_path.empty()) n = load_problem_file(problem_path).n;
  ExpPoly f = parse_expr(f_text, n);
  OrderEstimate est = serial ? estimate_order_serial(f, radii, samples, seed)
                             : estimate_order(f, radii, samples, seed);
  std::cout << "radii =";
  for (double r : est.radii) std::printf(" %g", r);
  std::cout << "\n";
  std::cout << "mean_log_plus =";
  for (double m : est.means) std::printf(" %.6g", m);
  std::cout << "\n";
  std::printf("slope = %.6g\n", est.slope);
  std::printf("fit_residual = %.6g\n", est.fit_residual);
  std::cout << "exponential_free = " << bool_name(est.exponential_free) << "\n";
  std::printf("order = %.6g\n", est.order());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for quadratic functional equations with shifts"};
  app.require_subcommand(1);

  std::string problem_path, f_text, g_text, u_text = "0", gstar_text;
  std::string kopt = "both", case_opt = "auto", family = "case", format = "records";
  int points = 100, samples = 4096, nvars = 2, sign = 1;
  double radius = 2.0;
  std::vector<double> radii;
  std::uint64_t seed = kDefaultSeed;
  bool serial = false;

  auto add_problem = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--problem", problem_path, "problem JSON file");
    if (required) opt->required();
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"records"}));
  };
  auto add_k = [&](CLI::App* sub) {
    sub->add_option("--k", kopt, "which k to use")->check(CLI::IsMember({"1", "-1", "both"}));
  };

  auto* c_classify = app.add_subcommand("classify", "classify a problem into its case");
  add_problem(c_classify);

  auto* c_derive = app.add_subcommand("derive", "print the derived quantities");
  add_problem(c_derive);
  add_k(c_derive);

  auto* c_verify = app.add_subcommand("verify", "reduce the residual of a candidate f");
  add_problem(c_verify);
  c_verify->add_option("--f", f_text, "candidate expression")->required();

  auto* c_transform = app.add_subcommand(
      "transform", "solve the quadratic form via the equivalence transform (p1..p6 as etas)");
  add_problem(c_transform);
  c_transform->add_option("--g", g_text, "phase expression")->required();
  c_transform->add_option("--u", u_text, "free part u (default 0)");
  add_k(c_transform);

  auto* c_construct = app.add_subcommand("construct", "build a candidate family");
  add_problem(c_construct);
  c_construct->add_option("--g", g_text, "phase expression");
  c_construct->add_option("--case", case_opt, "force a case")
      ->check(CLI::IsMember({"auto", "1", "2", "3", "4"}));
  c_construct->add_option("--family", family, "candidate family")
      ->check(CLI::IsMember({"case", "sine", "linear-phase"}));
  c_construct->add_option("--gstar", gstar_text, "gstar(z2) for the linear-phase family");
  c_construct->add_option("--sign", sign, "sign of the linear-phase root (+1/-1)")
      ->check(CLI::IsMember({1, -1}));
  c_construct->add_option("--f", f_text, "candidate f for the singular-case relations");
  add_k(c_construct);

  auto* c_props = app.add_subcommand("check-properties", "clause report for a phase g");
  add_problem(c_props);
  c_props->add_option("--g", g_text, "phase expression")->required();
  add_k(c_props);

  auto* c_iff = app.add_subcommand("check-iff", "vanishing-pair characterizations");
  add_problem(c_iff);
  c_iff->add_option("--g", g_text, "phase expression (optional: enables the identities)");
  add_k(c_iff);

  auto* c_spot = app.add_subcommand("spot-check", "numeric random-point residual check");
  add_problem(c_spot);
  c_spot->add_option("--f", f_text, "candidate expression")->required();
  c_spot->add_option("--points", points, "number of sample points");
  c_spot->add_option("--radius", radius, "polydisc radius");
  c_spot->add_option("--seed", seed, "RNG seed");
  c_spot->add_flag("--serial", serial, "use the serial reference kernel");

  auto* c_order = app.add_subcommand("estimate-order", "growth order of an entire expression");
  add_problem(c_order, /*required=*/false);
  c_order->add_option("--f", f_text, "expression")->required();
  c_order->add_option("--n", nvars, "variable count when no problem file is given");
  c_order->add_option("--radii", radii, "sphere radii (default 4 8 16 32 64)");
  c_order->add_option("--samples", samples, "samples per radius");
  c_order->add_option("--seed", seed, "RNG seed");
  c_order->add_flag("--serial", serial, "use the serial reference kernel");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    if (app.got_subcommand(c_classify)) return run_classify(problem_path);
    if (app.got_subcommand(c_derive)) return run_derive(problem_path, kopt);
    if (app.got_subcommand(c_verify)) return run_verify(problem_path, f_text);
    if (app.got_subcommand(c_transform)) return run_transform(problem_path, g_text, u_text, kopt);
    if (app.got_subcommand(c_construct))
      return run_construct(problem_path, g_text, kopt, case_opt, family, gstar_text, sign,
                           f_text);
    if (app.got_subcommand(c_props)) return run_check_properties(problem_path, g_text, kopt);
    if (app.got_subcommand(c_iff)) return run_check_iff(problem_path, g_text, kopt);
    if (app.got_subcommand(c_spot))
      return run_spot_check(problem_path, f_text, points, radius, seed, serial);
    if (app.got_subcommand(c_order))
      return run_estimate_order(problem_path, f_text, nvars, radii, samples, seed, serial);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
