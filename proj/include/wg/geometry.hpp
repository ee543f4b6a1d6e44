#pragma once

#include <cmath>
#include <numbers>

namespace wg {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator-(Point2 a) { return {-a.x, -a.y}; }
  friend constexpr Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend constexpr Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Point2, Point2) = default;
};

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline bool is_finite(Point2 a) { return std::isfinite(a.x) && std::isfinite(a.y); }

/// Counterclockwise quarter turn.
constexpr Point2 perp(Point2 a) { return {-a.y, a.x}; }

inline Point2 rotate(Point2 a, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * a.x - s * a.y, s * a.x + c * a.y};
}

/// Signed angle from a to b in (-pi, pi].
inline double signed_angle(Point2 a, Point2 b) { return std::atan2(cross(a, b), dot(a, b)); }

/// Reduces an angle to (-pi, pi].
inline double wrap_angle(double a) {
  a = std::remainder(a, kTwoPi);
  return a <= -kPi ? a + kTwoPi : a;
}

/// Affine map p -> linear * p + offset, with `linear` given row-major.
struct AffineMap {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;
  Point2 offset{};

  Point2 apply_linear(Point2 p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }
  Point2 apply(Point2 p) const { return apply_linear(p) + offset; }
  double determinant() const { return a * d - b * c; }

  static AffineMap rotation(double angle, Point2 center = {}) {
    const double co = std::cos(angle), si = std::sin(angle);
    AffineMap m{co, -si, si, co, {}};
    m.offset = center - m.apply_linear(center);
    return m;
  }
};

}  // namespace wg
