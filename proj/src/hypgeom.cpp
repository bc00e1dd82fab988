#include "hypcolor/hypgeom.hpp"

#include <stdexcept>
#include <string>

namespace hypcolor {

HPoint HPoint::make(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw std::domain_error("HPoint: non-finite coordinate");
  }
  if (!(y > 0.0)) {
    throw std::domain_error("HPoint: y must be positive, got " + std::to_string(y));
  }
  return HPoint{x, y};
}

Isometry::Isometry(double a, double b, double c, double e) : a_(a), b_(b), c_(c), e_(e) {
  const double det = a * e - b * c;
  if (!(det > 0.0) || !std::isfinite(det)) {
    throw std::domain_error("Isometry: degenerate or orientation-reversing matrix");
  }
  renormalize();
}

void Isometry::renormalize() {
  const double s = 1.0 / std::sqrt(a_ * e_ - b_ * c_);
  a_ *= s;
  b_ *= s;
  c_ *= s;
  e_ *= s;
}

Isometry Isometry::translation(double t) { return {1.0, t, 0.0, 1.0}; }

Isometry Isometry::scaling(double lambda) {
  const double s = std::sqrt(lambda);
  return {s, 0.0, 0.0, 1.0 / s};
}

Isometry Isometry::rotation_about_i(double angle) {
  // z -> (cos z + sin) / (-sin z + cos) has derivative e^{i angle} at i.
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  return {c, s, -s, c};
}

Isometry Isometry::carry_i_to(const HPoint& p) {
  const double s = std::sqrt(p.y);
  return {s, p.x / s, 0.0, 1.0 / s};
}

Isometry Isometry::rotation_about(const HPoint& p, double angle) {
  const Isometry t = carry_i_to(p);
  return t * rotation_about_i(angle) * t.inverse();
}

Isometry Isometry::operator*(const Isometry& o) const {
  Isometry r;
  r.a_ = a_ * o.a_ + b_ * o.c_;
  r.b_ = a_ * o.b_ + b_ * o.e_;
  r.c_ = c_ * o.a_ + e_ * o.c_;
  r.e_ = c_ * o.b_ + e_ * o.e_;
  r.renormalize();
  return r;
}

Isometry Isometry::inverse() const { return {e_, -b_, -c_, a_}; }

double hyp_cosh_distance_minus_one(const HPoint& p, const HPoint& q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return (dx * dx + dy * dy) / (2.0 * p.y * q.y);
}

double hyp_distance(const HPoint& p, const HPoint& q) {
  if (!(p.y > 0.0) || !(q.y > 0.0)) {
    throw std::domain_error("hyp_distance: point off the half-plane");
  }
  // cosh d - 1 = 2 sinh^2(d/2); asinh avoids the cancellation of arccosh near 1.
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return 2.0 * std::asinh(std::sqrt((dx * dx + dy * dy) / (4.0 * p.y * q.y)));
}

HPoint point_at_distance(const HPoint& p, double phi, double s) {
  if (s < 0.0) throw std::domain_error("point_at_distance: negative length");
  const double sh = std::sinh(s);
  // cosh s + sinh s sin(phi) = e^{-s} + sinh s (1 + sin phi), and
  // 1 + sin phi = (sin(phi/2) + cos(phi/2))^2: no cancellation near phi = -pi/2.
  const double lift = std::sin(phi / 2.0) + std::cos(phi / 2.0);
  return HPoint::make(p.x + p.y * sh * std::cos(phi), p.y * (std::exp(-s) + sh * lift * lift));
}

HPoint point_in_direction(const HPoint& p, double angle, double s) {
  if (s < 0.0) throw std::domain_error("point_in_direction: negative length");
  const Isometry m = Isometry::carry_i_to(p) * Isometry::rotation_about_i(angle - std::numbers::pi / 2.0);
  return apply_isometry(m, HPoint{0.0, std::exp(s)});
}

HPoint apply_isometry(const Isometry& m, const HPoint& p) {
  const double re = m.c() * p.x + m.e();
  const double im = m.c() * p.y;
  const double den = re * re + im * im;
  if (!(den > 0.0)) throw std::domain_error("apply_isometry: degenerate image");
  const double nx = (m.a() * p.x + m.b()) * re + m.a() * m.c() * p.y * p.y;
  return HPoint::make(nx / den, m.det() * p.y / den);
}

}  // namespace hypcolor
