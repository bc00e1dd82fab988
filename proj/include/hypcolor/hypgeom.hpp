#pragma once

#include <cmath>
#include <numbers>

namespace hypcolor {

/// A point of the upper half-plane model. Constructed through `make`,
/// which rejects y <= 0 and non-finite coordinates.
struct HPoint {
  double x = 0.0;
  double y = 1.0;

  static HPoint make(double x, double y);
  friend bool operator==(const HPoint&, const HPoint&) = default;
};

/// Orientation-preserving isometry z -> (a z + b) / (c z + e), det = 1.
class Isometry {
 public:
  Isometry() = default;
  /// Throws std::domain_error when the determinant is not positive.
  /// The matrix is rescaled to determinant 1.
  Isometry(double a, double b, double c, double e);

  static Isometry identity() { return {}; }
  /// z -> z + t
  static Isometry translation(double t);
  /// z -> lambda z (lambda > 0)
  static Isometry scaling(double lambda);
  /// Rotation by `angle` (counter-clockwise) about the point i = (0, 1).
  static Isometry rotation_about_i(double angle);
  /// Sends i to p by a scaling followed by a horizontal translation.
  static Isometry carry_i_to(const HPoint& p);
  /// Rotation by `angle` about an arbitrary point.
  static Isometry rotation_about(const HPoint& p, double angle);

  /// Composition: (*this * other)(z) = this(other(z)). Result renormalized.
  Isometry operator*(const Isometry& other) const;
  Isometry inverse() const;

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double e() const { return e_; }
  double det() const { return a_ * e_ - b_ * c_; }

 private:
  void renormalize();

  double a_ = 1.0, b_ = 0.0, c_ = 0.0, e_ = 1.0;
};

/// Hyperbolic distance in the upper half-plane. Uses an asinh form that stays
/// accurate for nearly coincident points.
double hyp_distance(const HPoint& p, const HPoint& q);

/// cosh of the distance minus one; cheap monotone proxy for comparisons.
double hyp_cosh_distance_minus_one(const HPoint& p, const HPoint& q);

/// Point at distance s from p, using the Euclidean-circle parametrization of
/// the hyperbolic circle of radius s (center (x, y cosh s), radius y sinh s).
/// `phi` is the Euclidean angle on that circle, not the hyperbolic angle at p.
HPoint point_at_distance(const HPoint& p, double phi, double s);

/// Point at distance s from p leaving in true hyperbolic direction `angle`
/// (measured counter-clockwise from the positive x direction at p).
HPoint point_in_direction(const HPoint& p, double angle, double s);

HPoint apply_isometry(const Isometry& m, const HPoint& p);

/// cosh(x) - 1 without cancellation for small x.
inline double coshm1(double x) {
  const double s = std::sinh(x / 2.0);
  return 2.0 * s * s;
}

/// arccosh(1 + x) for x >= 0, accurate for small x.
inline double acosh1p(double x) { return 2.0 * std::asinh(std::sqrt(x / 2.0)); }

/// Smallest integer >= x, treating values within a relative 1e-9 above an
/// integer as that integer (absorbs e^{log 3} = 3.0000000000000004).
inline long long ceil_tol(double x) {
  return static_cast<long long>(std::ceil(x - 1e-9 * std::fmax(1.0, std::fabs(x))));
}

}  // namespace hypcolor
