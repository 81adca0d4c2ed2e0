#include "fermat/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fermat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPoleTol = 1e-12;
constexpr double kAbsFloor = 1e-12;

// splitmix64 finalizer: the bijective scrambler, usable as a hash.
std::uint64_t hash64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Per-draw generator keyed by position in the experiment, never by thread.
struct Rng {
  std::uint64_t s;
  Rng(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    s = hash64(seed ^ hash64(a + 0x51ed2701ULL));
    s = hash64(s ^ hash64(b + 0x9b1a6d3bULL));
  }
  std::uint64_t next() {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform on (0, 1]: 53 bits, never zero, so logs stay finite
  double uniform01() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }
};

std::vector<std::complex<double>> draw_polydisc(Rng& rng, int n, double radius) {
  std::vector<std::complex<double>> z(n);
  for (int j = 0; j < n; ++j) {
    double r = radius * std::sqrt(rng.uniform01());
    double th = 2.0 * M_PI * rng.uniform01();
    z[j] = std::polar(r, th);
  }
  return z;
}

std::vector<std::complex<double>> draw_sphere(Rng& rng, int n, double radius) {
  std::vector<std::complex<double>> w(n);
  double nrm2 = 0.0;
  for (int j = 0; j < n; ++j) {
    double amp = std::sqrt(-2.0 * std::log(rng.uniform01()));
    double th = 2.0 * M_PI * rng.uniform01();
    w[j] = std::polar(amp, th);
    nrm2 += std::norm(w[j]);
  }
  if (nrm2 <= 0.0) {  // astronomically unlikely; keep the draw well-defined
    w.assign(n, 0.0);
    w[0] = 1.0;
    nrm2 = 1.0;
  }
  double scale = radius / std::sqrt(nrm2);
  for (auto& x : w) x *= scale;
  return w;
}

// log|e(z)|, computed without leaving the log domain, so exponential factors
// with large imaginary phase parts cannot overflow.  Returns -inf for
// (numerically) zero values.
double log_abs_eval(const ExpPoly& e, const std::vector<std::complex<double>>& z) {
  double M = -kInf;
  std::vector<std::pair<double, double>> parts;  // (log magnitude, angle)
  parts.reserve(e.terms.size());
  for (const auto& t : e.terms) {
    std::complex<double> num = poly_eval(t.coeff.num, z);
    std::complex<double> den = poly_eval(t.coeff.den, z);
    if (std::abs(den) < kPoleTol * std::max(1.0, std::abs(num)))
      fail("PoleAtPoint", "coefficient denominator vanishes at the sample point");
    std::complex<double> c = num / den;
    std::complex<double> val = scalar_to_complex(t.residual);
    if (t.phase) val += eval_point(*t.phase, z);
    double lm = (std::abs(c) == 0.0 ? -kInf : std::log(std::abs(c))) - val.imag();
    parts.emplace_back(lm, std::arg(c) + val.real());
    M = std::max(M, lm);
  }
  if (!std::isfinite(M)) return -kInf;
  std::complex<double> acc = 0.0;
  for (const auto& [lm, th] : parts)
    if (std::isfinite(lm)) acc += std::exp(lm - M) * std::polar(1.0, th);
  double a = std::abs(acc);
  if (a == 0.0) return -kInf;
  return M + std::log(a);
}

// One point of the spot check: returns the relative residual, or a negative
// sentinel (-1 pole skip) after exhausting resample attempts.
double spot_check_point(const PddeProblem& prob, const ExpPoly& f, const ExpPoly& Lf,
                        const ExpPoly& fbar, double radius, std::uint64_t seed, int i) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    Rng rng(seed, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(attempt));
    auto z = draw_polydisc(rng, prob.n, radius);
    try {
      std::complex<double> fv = eval_point(f, z);
      std::complex<double> lf = eval_point(Lf, z);
      std::complex<double> fb = eval_point(fbar, z);
      std::complex<double> X = poly_eval(prob.p1, z) * lf + poly_eval(prob.p2, z) * fb +
                               poly_eval(prob.p5, z) * fv;
      std::complex<double> Y = poly_eval(prob.p3, z) * lf + poly_eval(prob.p4, z) * fb +
                               poly_eval(prob.p6, z) * fv;
      std::complex<double> P = poly_eval(prob.p, z);
      std::complex<double> R = X * X + Y * Y - P;
      double mag = std::abs(R);
      if (mag < kAbsFloor) return 0.0;
      double denom = std::max({1.0, std::norm(X), std::norm(Y), std::abs(P)});
      return mag / denom;
    } catch (const Error& err) {
      if (err.kind != "PoleAtPoint") throw;
      // resample and retry
    }
  }
  return -1.0;
}

SpotCheckReport finish_spot_check(const std::vector<double>& rel, int points) {
  SpotCheckReport rep;
  rep.points = points;
  for (double r : rel) {
    if (r < 0.0) {
      ++rep.pole_skips;
      continue;
    }
    ++rep.evaluated;
    rep.max_rel_error = std::max(rep.max_rel_error, r);
  }
  rep.pass = rep.evaluated > 0 && rep.max_rel_error < rep.tol;
  return rep;
}

double mean_log_plus(const ExpPoly& f, int n, double radius, int samples, std::uint64_t seed,
                     std::uint64_t radius_key, bool parallel) {
  constexpr int kChunk = 256;
  int chunks = (samples + kChunk - 1) / kChunk;
  std::vector<double> sums(static_cast<std::size_t>(chunks), 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (int ch = 0; ch < chunks; ++ch) {
    double s = 0.0;
    int hi = std::min(samples, (ch + 1) * kChunk);
    for (int i = ch * kChunk; i < hi; ++i) {
      Rng rng(seed, radius_key, static_cast<std::uint64_t>(i));
      auto z = draw_sphere(rng, n, radius);
      double la = log_abs_eval(f, z);
      s += std::max(0.0, la);
    }
    sums[static_cast<std::size_t>(ch)] = s;
  }
  double total = 0.0;
  for (double s : sums) total += s;  // fixed combination order
  return total / static_cast<double>(samples);
}

OrderEstimate estimate_order_impl(const ExpPoly& f, std::vector<double> radii, int samples,
                                  std::uint64_t seed, bool parallel) {
  if (!ep_entire_shape(f))
    fail("NotEntireCandidate",
         "growth order is defined for entire candidates; a coefficient denominator is "
         "non-constant");
  if (radii.empty()) radii = {4, 8, 16, 32, 64};
  if (radii.size() < 2) fail("SchemaError", "need at least two radii to fit a slope");
  if (samples <= 0) fail("SchemaError", "samples_per_radius must be positive");
  for (double r : radii)
    if (!(r > 0)) fail("SchemaError", "radii must be positive");

  OrderEstimate est;
  est.radii = radii;
  est.exponential_free = !ep_has_phase_factor(f);
  for (std::size_t ri = 0; ri < radii.size(); ++ri) {
    double m = mean_log_plus(f, f.n, radii[ri], samples, seed, ri, parallel);
    est.means.push_back(m);
    est.log_means.push_back(std::log(std::max(m, 1e-300)));
  }
  // least squares of log m against log r
  std::size_t npts = radii.size();
  double sx = 0, sy = 0;
  std::vector<double> xs(npts);
  for (std::size_t i = 0; i < npts; ++i) {
    xs[i] = std::log(radii[i]);
    sx += xs[i];
    sy += est.log_means[i];
  }
  double mx = sx / static_cast<double>(npts), my = sy / static_cast<double>(npts);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < npts; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (est.log_means[i] - my);
  }
  est.slope = sxx > 0 ? sxy / sxx : 0.0;
  double icept = my - est.slope * mx;
  double rss = 0;
  for (std::size_t i = 0; i < npts; ++i) {
    double e = est.log_means[i] - (icept + est.slope * xs[i]);
    rss += e * e;
  }
  est.fit_residual = std::sqrt(rss / static_cast<double>(npts));
  return est;
}

}  // namespace

std::complex<double> eval_point(const ExpPoly& e, const std::vector<std::complex<double>>& z) {
  std::complex<double> acc = 0.0;
  for (const auto& t : e.terms) {
    std::complex<double> num = poly_eval(t.coeff.num, z);
    std::complex<double> den = poly_eval(t.coeff.den, z);
    if (std::abs(den) < kPoleTol * std::max(1.0, std::abs(num)))
      fail("PoleAtPoint", "coefficient denominator vanishes at the sample point");
    std::complex<double> v = num / den;
    std::complex<double> arg = scalar_to_complex(t.residual);
    if (t.phase) arg += eval_point(*t.phase, z);
    acc += v * std::exp(std::complex<double>(0.0, 1.0) * arg);
  }
  return acc;
}

SpotCheckReport spot_check(const PddeProblem& prob, const ExpPoly& f, int points, double radius,
                           std::uint64_t seed) {
  if (points <= 0) fail("SchemaError", "points must be positive");
  if (!(radius > 0)) fail("SchemaError", "radius must be positive");
  ExpPoly Lf = ep_apply_L(f, prob.L);
  ExpPoly fbar = bar(prob, f, +1);
  std::vector<double> rel(static_cast<std::size_t>(points), -1.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int i = 0; i < points; ++i)
    rel[static_cast<std::size_t>(i)] = spot_check_point(prob, f, Lf, fbar, radius, seed, i);
  return finish_spot_check(rel, points);
}

SpotCheckReport spot_check_serial(const PddeProblem& prob, const ExpPoly& f, int points,
                                  double radius, std::uint64_t seed) {
  if (points <= 0) fail("SchemaError", "points must be positive");
  if (!(radius > 0)) fail("SchemaError", "radius must be positive");
  ExpPoly Lf = ep_apply_L(f, prob.L);
  ExpPoly fbar = bar(prob, f, +1);
  std::vector<double> rel(static_cast<std::size_t>(points), -1.0);
  for (int i = 0; i < points; ++i)
    rel[static_cast<std::size_t>(i)] = spot_check_point(prob, f, Lf, fbar, radius, seed, i);
  return finish_spot_check(rel, points);
}

OrderEstimate estimate_order(const ExpPoly& f, const std::vector<double>& radii,
                             int samples_per_radius, std::uint64_t seed) {
  return estimate_order_impl(f, radii, samples_per_radius, seed, true);
}

OrderEstimate estimate_order_serial(const ExpPoly& f, const std::vector<double>& radii,
                                    int samples_per_radius, std::uint64_t seed) {
  return estimate_order_impl(f, radii, samples_per_radius, seed, false);
}

}  // namespace fermat
