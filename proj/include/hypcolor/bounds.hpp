#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypcolor/checkerboard.hpp"
#include "hypcolor/hypgeom.hpp"

namespace hypcolor {

enum class BoundSource {
  SMALL_D_9,
  TABLE_12,
  TABLE_15,
  TABLE_16,
  TABLE_18,
  FUNDDOM_8,
  LARGE_D_K4,
  LARGE_D_K3,
  OPTIMIZED,
  INTERVAL,
};
const char* to_string(BoundSource s);

/// Checkerboard parameters realizing a bound: palette (k + 1)(m + 1).
struct CheckerParams {
  double h = 0.0;
  double w = 0.0;
  int k = 0;
  int m = 0;
};

struct BoundResult {
  long long value = 0;
  BoundSource source = BoundSource::OPTIMIZED;
  std::optional<CheckerParams> params;
};

/// Scheme for the distance d (or interval [d, dMax]) built from params.
Scheme scheme_from(const CheckerParams& p, double d, double dMax);
inline Scheme scheme_from(const CheckerParams& p, double d) { return scheme_from(p, d, d); }

/// Widest rectangle base for strata of height h whose rectangles still have
/// diameter <= d. Throws std::domain_error when h is too tall for any width.
double w_of_h(double d, double h);
/// Horizontal period forced by w_of_h.
int k_of_h(double d, double h);

/// Minimizes (k(h) + 1)(ceil(d/h) + 1) over h. Never returns less than 9.
BoundResult optimize_checkerboard(double d, int gridSteps = 512);

/// Every closed form whose hypothesis holds at d, in source order.
std::vector<BoundResult> applicable_closed_forms(double d);
/// Smallest of applicable_closed_forms(d); the earliest source wins ties.
BoundResult closed_form_bound(double d);

/// Non-zero root of (1 + 2 e^{d/2} cosh d - e^d)/2 - cosh d by bisection.
double solve_d0();
/// 2 log(((108 + 12 sqrt 69)^{1/3} + 12 / (108 + 12 sqrt 69)^{1/3}) / 6)
double d0_closed_form();
/// Left side of the equation solved by solve_d0.
double d0_residual(double d);

struct IntervalBound {
  bool applicable = false;
  std::string reason;  // set when not applicable
  BoundResult bound;   // source INTERVAL
  double envelope = 0.0;  // 2 (2 e^{(cd-1)/2} + 1)(cd + 1)
  std::optional<Scheme> scheme;
};

/// Checkerboard bound for the interval [d, cd] with w = d and h = log 4.
IntervalBound interval_upper_bound(double d, double c);

struct CliqueWitness {
  std::vector<HPoint> points;
  double dMin = 0.0;
  double dMax = 0.0;
  double theta = 0.0;  // central angle between successive points
  bool pairwiseOk = false;
  int size() const { return static_cast<int>(points.size()); }
};

/// Points at angles k theta on the circle of radius cd/2 about i, successive
/// points at distance d. Throws std::invalid_argument unless c > 1, d > 0.
CliqueWitness interval_clique_points(double d, double c);

/// True iff every distinct pair lies in [lo - tol, hi + tol].
bool pairwise_in_range(const std::vector<HPoint>& pts, double lo, double hi, double tol = 1e-9);

}  // namespace hypcolor
