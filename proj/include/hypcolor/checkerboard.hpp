#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hypcolor/hypgeom.hpp"
#include "hypcolor/parallel.hpp"

namespace hypcolor {

/// Horocyclic checkerboard: strata y in [e^{jh}, e^{(j+1)h}) cut into
/// rectangles whose base endpoints are at distance w. Rectangle (i, j) gets
/// color (i mod (kPeriod+1), j mod (mPeriod+1)).
///
/// dMin == dMax for the single-distance problem; dMax > dMin for the
/// interval problem [dMin, dMax].
struct Scheme {
  double dMin = 1.0;
  double dMax = 1.0;
  double h = 0.5;
  double w = 1.0;
  double r = 0.0;  // Euclidean base width of R_{0,0}: sqrt(2 (cosh w - 1))
  int kPeriod = 2;
  int mPeriod = 2;

  /// Fills r from w. Throws std::invalid_argument on non-positive lengths,
  /// dMax < dMin, kPeriod < 2 or mPeriod < 1.
  static Scheme make(double dMin, double dMax, double h, double w, int kPeriod, int mPeriod);

  long long palette_size() const {
    return static_cast<long long>(kPeriod + 1) * static_cast<long long>(mPeriod + 1);
  }
};

struct RectIndex {
  long long i = 0;
  long long j = 0;
  friend bool operator==(const RectIndex&, const RectIndex&) = default;
};

struct Color {
  int horiz = 0;
  int vert = 0;
  friend bool operator==(const Color&, const Color&) = default;
  long long index(const Scheme& s) const { return horiz + static_cast<long long>(s.kPeriod + 1) * vert; }
};

/// Half-open rectangle containing p: left and bottom edges belong to the
/// rectangle, right and top edges to its neighbours.
RectIndex rect_of_point(const Scheme& s, const HPoint& p);
Color color_of_rect(const Scheme& s, const RectIndex& idx);
Color color_of_point(const Scheme& s, const HPoint& p);

/// Diameter of the closed rectangle: max of the base and the diagonal.
double rect_diameter(double w, double h);
/// Distance between the two upper corners of a rectangle.
double upper_corner_distance(double w, double h);
/// Distance between two rectangles of one stratum with `gap` full rectangles
/// strictly between them (0 when they touch).
double same_stratum_separation(double w, double h, long long gap);

/// Horizontal color period needed so that same-colored rectangles of a
/// stratum are at least dMax apart: e^h sqrt((cosh dMax - 1)/(cosh w - 1)).
double required_k(double dMax, double w, double h);

struct SchemeCheck {
  std::string name;
  std::string relation;  // "<=" or ">="
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

struct ValidationReport {
  std::vector<SchemeCheck> checks;
  bool ok() const;
};

/// Checks r against w, the horizontal period, the vertical period and the
/// rectangle diameter. Inequalities are tested with a relative slack of 1e-9.
ValidationReport validate_scheme(const Scheme& s);

struct SamplingOptions {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  /// Strata window [0, strata); 0 means 3 (mPeriod + 1).
  int strata = 0;
  /// Horizontal extent in color periods per stratum.
  int horizontalPeriods = 3;
  /// Sample even when validate_scheme fails (mutation testing).
  bool allowInvalid = false;
  std::size_t maxExemplars = 32;
};

struct Violation {
  HPoint p;
  HPoint q;
  double t = 0.0;
  Color color;
};

struct ViolationReport {
  Scheme scheme;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t violationCount = 0;
  std::uint64_t screenedCount = 0;  // same-color hits that sat on a rectangle boundary
  std::vector<Violation> violations;  // exemplars, in sample order
  bool ok() const { return violationCount == 0; }
};

/// Draws point pairs at a forbidden distance and reports same-colored pairs.
/// Samples are split into fixed chunks with seed-derived streams, so the
/// report does not depend on the worker count. Throws std::invalid_argument
/// for a scheme failing validate_scheme unless allowInvalid is set.
ViolationReport verify_by_sampling(const Scheme& s, const SamplingOptions& opt, Exec exec = Exec::Parallel);

/// CSV rows `x,y,horiz,vert,colorIndex` over an nx-by-ny grid covering the
/// default sampling window (y log-spaced).
void export_color_map_csv(const Scheme& s, int nx, int ny, std::ostream& out);

}  // namespace hypcolor
