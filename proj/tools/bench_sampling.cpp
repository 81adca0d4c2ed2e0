// Timing comparison of the parallel sampling kernels against the serial
// references, on a representative exponential candidate.  Also asserts that
// both produce bitwise-identical results (the streams are position-keyed).

#include <chrono>
#include <cstdio>
#include <cstring>

#include "fermat/numeric.hpp"
#include "fermat/parse.hpp"
#include "fermat/problem.hpp"
#include "fermat/solvers.hpp"

using namespace fermat;
using Clock = std::chrono::steady_clock;

static double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
  int points = argc > 1 ? std::atoi(argv[1]) : 20000;
  int samples = argc > 2 ? std::atoi(argv[2]) : 16384;

  const char* json = R"({
    "n": 2,
    "p1": "1", "p2": "-1", "p3": "1", "p4": "1", "p": "1",
    "c": ["2*pi", "0"],
    "L": [{"var": 1, "coeff": "1"}]
  })";
  PddeProblem prob = load_problem(json);
  ExpPoly g = parse_expr("z1 + z2^3 + 1", prob.n);
  SolutionCandidate cand = construct_case1(prob, g, 1);
  std::printf("candidate: f = %s\n", print_expr(cand.f).c_str());

  auto t0 = Clock::now();
  SpotCheckReport sp_par = spot_check(prob, cand.f, points, 2.0);
  double tp = ms_since(t0);
  t0 = Clock::now();
  SpotCheckReport sp_ser = spot_check_serial(prob, cand.f, points, 2.0);
  double ts = ms_since(t0);
  bool sp_same = std::memcmp(&sp_par.max_rel_error, &sp_ser.max_rel_error, sizeof(double)) == 0 &&
                 sp_par.evaluated == sp_ser.evaluated && sp_par.pole_skips == sp_ser.pole_skips;
  std::printf("spot_check      %6d points   parallel %8.1f ms   serial %8.1f ms   x%.2f   %s\n",
              points, tp, ts, tp > 0 ? ts / tp : 0.0, sp_same ? "identical" : "MISMATCH");

  t0 = Clock::now();
  OrderEstimate oe_par = estimate_order(cand.f, {}, samples);
  tp = ms_since(t0);
  t0 = Clock::now();
  OrderEstimate oe_ser = estimate_order_serial(cand.f, {}, samples);
  ts = ms_since(t0);
  bool oe_same = oe_par.means == oe_ser.means &&
                 std::memcmp(&oe_par.slope, &oe_ser.slope, sizeof(double)) == 0;
  std::printf("estimate_order  %6d samples  parallel %8.1f ms   serial %8.1f ms   x%.2f   %s\n",
              samples, tp, ts, tp > 0 ? ts / tp : 0.0, oe_same ? "identical" : "MISMATCH");
  std::printf("slope = %.4f (expect about 3 for a cubic phase)\n", oe_par.slope);

  return (sp_same && oe_same) ? 0 : 1;
}
