#include "hypcolor/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace hypcolor {

namespace {

const double kLog2 = std::log(2.0);
const double kLog3 = std::log(3.0);
const double kLog4 = std::log(4.0);

struct Candidate {
  long long value = 0;
  CheckerParams params;
};

// Integer objective at h; nullopt when h is outside (0, d).
std::optional<Candidate> evaluate(double d, double h) {
  if (!(h > 0.0) || !(h < d)) return std::nullopt;
  const long long m = ceil_tol(d / h);
  const double w = w_of_h(d, h);
  const double kReal = required_k(d, w, h);
  // Thin rectangles at large d need astronomically many colors; skip them.
  if (!(kReal < 1e9) || m > 1'000'000) return std::nullopt;
  const int k = k_of_h(d, h);
  return Candidate{static_cast<long long>(k + 1) * (m + 1), {h, w, k, static_cast<int>(m)}};
}

// Continuous relaxation of the objective, used only to steer refinement.
double relaxed(double d, double h) {
  const double v = (required_k(d, w_of_h(d, h), h) + 1.0) * (d / h + 1.0);
  return std::isfinite(v) ? v : std::numeric_limits<double>::max();
}

bool better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value < b.value;
  return a.params.h > b.params.h;
}

BoundResult table_entry(double d, long long value, BoundSource src) {
  BoundResult r{value, src, std::nullopt};
  const BoundResult opt = optimize_checkerboard(d);
  if (opt.value <= value) r.params = opt.params;
  return r;
}

BoundResult large_d(double d, int k, double h, BoundSource src) {
  const int m = static_cast<int>(ceil_tol(d / h));
  return {static_cast<long long>(k + 1) * (m + 1), src, CheckerParams{h, d, k, m}};
}

}  // namespace

const char* to_string(BoundSource s) {
  switch (s) {
    case BoundSource::SMALL_D_9: return "SMALL_D_9";
    case BoundSource::TABLE_12: return "TABLE_12";
    case BoundSource::TABLE_15: return "TABLE_15";
    case BoundSource::TABLE_16: return "TABLE_16";
    case BoundSource::TABLE_18: return "TABLE_18";
    case BoundSource::FUNDDOM_8: return "FUNDDOM_8";
    case BoundSource::LARGE_D_K4: return "LARGE_D_K4";
    case BoundSource::LARGE_D_K3: return "LARGE_D_K3";
    case BoundSource::OPTIMIZED: return "OPTIMIZED";
    case BoundSource::INTERVAL: return "INTERVAL";
  }
  return "?";
}

Scheme scheme_from(const CheckerParams& p, double d, double dMax) {
  return Scheme::make(d, dMax, p.h, p.w, p.k, p.m);
}

double w_of_h(double d, double h) {
  if (!(d > 0.0) || !(h > 0.0)) throw std::invalid_argument("w_of_h: need d > 0 and h > 0");
  if (!(h < d)) throw std::domain_error("w_of_h: no admissible width for h >= d");
  // The arccosh argument minus one equals e^h (cosh d - cosh h).
  const double gap = 2.0 * std::sinh((d + h) / 2.0) * std::sinh((d - h) / 2.0);
  return std::min(d, acosh1p(std::exp(h) * gap));
}

int k_of_h(double d, double h) {
  const double w = w_of_h(d, h);
  return static_cast<int>(std::max<long long>(2, ceil_tol(required_k(d, w, h))));
}

BoundResult optimize_checkerboard(double d, int gridSteps) {
  if (!(d > 0.0)) throw std::invalid_argument("optimize_checkerboard: d must be positive");
  if (gridSteps < 10) throw std::invalid_argument("optimize_checkerboard: gridSteps must be >= 10");

  // The lower end is capped at 0.5 so that large d still reaches h = log 3, log 4.
  const double lo = std::min(d / 50.0, 0.5);
  const double logLo = std::log(lo);
  const double logHi = std::log(d);
  std::vector<double> grid(static_cast<std::size_t>(gridSteps));
  for (int i = 0; i < gridSteps; ++i) {
    grid[static_cast<std::size_t>(i)] = std::exp(logLo + (logHi - logLo) * (i + 1) / (gridSteps + 1));
  }

  std::optional<Candidate> best;
  auto consider = [&](double h) {
    const auto c = evaluate(d, h);
    if (c && (!best || better(*c, *best))) best = c;
  };

  std::size_t bestIdx = 0;
  double bestRelaxed = INFINITY;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    consider(grid[i]);
    const double g = relaxed(d, grid[i]);
    if (g < bestRelaxed) {
      bestRelaxed = g;
      bestIdx = i;
    }
  }

  // Golden-section search of the relaxation on the bracket around its grid minimum.
  double a = bestIdx == 0 ? lo : grid[bestIdx - 1];
  double b = bestIdx + 1 == grid.size() ? d * (1.0 - 1e-12) : grid[bestIdx + 1];
  const double inv = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv * (b - a), x2 = a + inv * (b - a);
  double f1 = relaxed(d, x1), f2 = relaxed(d, x2);
  for (int it = 0; it < 100 && b - a > 1e-12 * d; ++it) {
    if (f1 < f2) {
      b = x2, x2 = x1, f2 = f1;
      x1 = b - inv * (b - a), f1 = relaxed(d, x1);
    } else {
      a = x1, x1 = x2, f1 = f2;
      x2 = a + inv * (b - a), f2 = relaxed(d, x2);
    }
  }
  const double hStar = (a + b) / 2.0;
  consider(hStar);

  // For fixed m = ceil(d/h) the palette only grows with h, so h = d/m is
  // the best point of each plateau.
  const int mMax = static_cast<int>(std::ceil(d / lo));
  for (int m = 2; m <= mMax; ++m) consider(d / m);

  return {best->value, BoundSource::OPTIMIZED, best->params};
}

std::vector<BoundResult> applicable_closed_forms(double d) {
  if (!(d > 0.0)) throw std::invalid_argument("closed_form_bound: d must be positive");
  std::vector<BoundResult> out;
  if (d <= 2.0 * kLog2) out.push_back(table_entry(d, 9, BoundSource::SMALL_D_9));
  if (d <= 2.0 * kLog3) out.push_back(table_entry(d, 12, BoundSource::TABLE_12));
  if (d <= 2.0 * kLog4) out.push_back(table_entry(d, 15, BoundSource::TABLE_15));
  if (d <= 3.0 * kLog3) out.push_back(table_entry(d, 16, BoundSource::TABLE_16));
  if (d <= 5.0 * kLog2) out.push_back(table_entry(d, 18, BoundSource::TABLE_18));
  if (d >= 1.22 && d <= 1.77) out.push_back({8, BoundSource::FUNDDOM_8, std::nullopt});
  if (d >= 2.0) {
    out.push_back(large_d(d, 4, kLog4, BoundSource::LARGE_D_K4));
    out.push_back(large_d(d, 3, kLog3, BoundSource::LARGE_D_K3));
  }
  return out;
}

BoundResult closed_form_bound(double d) {
  const auto all = applicable_closed_forms(d);
  if (all.empty()) throw std::logic_error("closed_form_bound: no closed form applies");
  return *std::min_element(all.begin(), all.end(),
                           [](const BoundResult& x, const BoundResult& y) { return x.value < y.value; });
}

double d0_residual(double d) {
  return (1.0 + 2.0 * std::exp(d / 2.0) * std::cosh(d) - std::exp(d)) / 2.0 - std::cosh(d);
}

double solve_d0() {
  double a = 0.1, b = 1.0;
  double fa = d0_residual(a);
  if (!(fa * d0_residual(b) < 0.0)) throw std::logic_error("solve_d0: bracket does not straddle a root");
  while (b - a > 1e-12) {
    const double mid = (a + b) / 2.0;
    const double fm = d0_residual(mid);
    if ((fm < 0.0) == (fa < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return (a + b) / 2.0;
}

double d0_closed_form() {
  const double t = std::cbrt(108.0 + 12.0 * std::sqrt(69.0));
  return 2.0 * std::log((t + 12.0 / t) / 6.0);
}

IntervalBound interval_upper_bound(double d, double c) {
  if (!(d > 0.0) || !(c > 1.0)) throw std::invalid_argument("interval_upper_bound: need d > 0 and c > 1");
  IntervalBound out;
  const double cd = c * d;
  out.envelope = 2.0 * (2.0 * std::exp((cd - 1.0) / 2.0) + 1.0) * (cd + 1.0);

  const int k = static_cast<int>(ceil_tol(required_k(cd, d, kLog4)));
  const int strata = static_cast<int>(std::floor(cd + 1e-9));
  const CheckerParams p{kLog4, d, k, strata};
  out.bound = {static_cast<long long>(k + 1) * (strata + 1), BoundSource::INTERVAL, p};

  if (rect_diameter(d, kLog4) > d * (1.0 + 1e-9)) {
    out.reason = "rectangles of width d and height log 4 have diameter > d (needs cosh d >= 5/2)";
    return out;
  }
  if (strata < 1 || strata * kLog4 < cd * (1.0 - 1e-9)) {
    out.reason = "floor(cd) strata of height log 4 do not separate same-colored strata by cd";
    return out;
  }
  out.applicable = true;
  out.scheme = scheme_from(p, d, cd);
  return out;
}

bool pairwise_in_range(const std::vector<HPoint>& pts, double lo, double hi, double tol) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double dist = hyp_distance(pts[i], pts[j]);
      if (dist < lo - tol || dist > hi + tol) return false;
    }
  }
  return true;
}

CliqueWitness interval_clique_points(double d, double c) {
  if (!(d > 0.0) || !(c > 1.0)) throw std::invalid_argument("interval_clique_points: need d > 0 and c > 1");
  const double radius = c * d / 2.0;
  CliqueWitness out;
  out.dMin = d;
  out.dMax = c * d;
  out.theta = 2.0 * std::asin(std::sinh(d / 2.0) / std::sinh(radius));
  const int n = static_cast<int>(std::floor(2.0 * std::numbers::pi / out.theta));
  const HPoint center{0.0, 1.0};
  out.points.reserve(static_cast<std::size_t>(n));
  double previous = 0.0;
  for (int k = 0; k < n; ++k) {
    const double angle = k * out.theta;
    out.points.push_back(point_in_direction(center, angle, radius));
    if (angle <= std::numbers::pi) {
      const double chord = hyp_distance(out.points.front(), out.points.back());
      if (chord + 1e-9 < previous) throw std::logic_error("interval_clique_points: chord not monotone in angle");
      previous = chord;
    }
  }
  out.pairwiseOk = pairwise_in_range(out.points, out.dMin, out.dMax);
  return out;
}

}  // namespace hypcolor
