#pragma once
// Floating-point cross-checks for the exact pipeline: a random-point residual
// oracle and a growth-order estimator.  Everything is deterministic for a
// fixed seed — the sample streams are keyed by (seed, point index, attempt),
// never by thread id, so the OpenMP kernels and the serial references agree
// bitwise.

#include <complex>
#include <cstdint>

#include "fermat/pdde.hpp"

namespace fermat {

inline constexpr std::uint64_t kDefaultSeed = 424242;

// Evaluate a normal form at a point (nested phases recursively).  Raises
// PoleAtPoint when a coefficient denominator vanishes there numerically.
std::complex<double> eval_point(const ExpPoly& e, const std::vector<std::complex<double>>& z);

struct SpotCheckReport {
  int points = 0;        // requested
  int evaluated = 0;     // actually tested
  int pole_skips = 0;    // abandoned after resampling attempts
  double max_rel_error = 0.0;
  double tol = 1e-9;
  bool pass = false;  // max_rel_error < tol and at least one point evaluated
};

// Sample `points` points from the polydisc of the given radius and compare
// X^2 + Y^2 against p, with X and Y assembled numerically from symbolic
// L(f), f(z+c), f.  Relative error is |X^2+Y^2-p| / max(1, |X|^2, |Y|^2, |p|),
// with an absolute floor: residuals below 1e-12 count as zero.
SpotCheckReport spot_check(const PddeProblem& prob, const ExpPoly& f, int points,
                           double radius, std::uint64_t seed = kDefaultSeed);
// Plain-loop reference; bitwise-identical results to spot_check.
SpotCheckReport spot_check_serial(const PddeProblem& prob, const ExpPoly& f, int points,
                                  double radius, std::uint64_t seed = kDefaultSeed);

struct OrderEstimate {
  std::vector<double> radii;
  std::vector<double> means;      // m(r): mean of log+ |f| over the sphere |z| = r
  std::vector<double> log_means;  // log m(r)
  double slope = 0.0;             // least-squares d(log m)/d(log r)
  double fit_residual = 0.0;      // RMS residual of that fit
  bool exponential_free = false;  // no phase factor anywhere: order 0 by shape

  // Growth order estimate.  log+ of a polynomial grows like a multiple of
  // log r, so its fitted slope decays only like 1/log r — far too slowly to
  // read order 0 off the fit.  Shape analysis already answers that case
  // exactly, so it overrides the slope.
  double order() const { return exponential_free ? 0.0 : slope; }
};

// Estimate the growth order of an entire-shape normal form by sampling
// log+ |f| on spheres (default radii 4, 8, 16, 32, 64) and fitting
// log m(r) against log r.  |f| is evaluated in the log domain, so phases
// like z^3 at radius 64 do not overflow.  NotEntireCandidate when the
// expression has a non-constant coefficient denominator.
OrderEstimate estimate_order(const ExpPoly& f, const std::vector<double>& radii = {},
                             int samples_per_radius = 4096,
                             std::uint64_t seed = kDefaultSeed);
// Plain-loop reference; bitwise-identical results to estimate_order.
OrderEstimate estimate_order_serial(const ExpPoly& f, const std::vector<double>& radii = {},
                                    int samples_per_radius = 4096,
                                    std::uint64_t seed = kDefaultSeed);

}  // namespace fermat
