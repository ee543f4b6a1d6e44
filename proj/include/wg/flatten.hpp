#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wg/curve.hpp"
#include "wg/rewrite.hpp"

namespace wg {

/// Unit vector along the reference line l.
class Direction {
 public:
  Direction() = default;
  Direction(double ux, double uy);
  static Direction from_angle(double angle) { return {std::cos(angle), std::sin(angle)}; }

  double ux() const { return u_.x; }
  double uy() const { return u_.y; }
  Point2 along() const { return u_; }
  Point2 across() const { return perp(u_); }
  double angle() const { return std::atan2(u_.y, u_.x); }

 private:
  Point2 u_{1.0, 0.0};
};

/// Tangency with a line perpendicular to l.
struct Turn {
  Letter dir = Letter::L;
  double t = 0.0;  ///< parameter in [0, 2*pi)
  double x = 0.0;  ///< projection of the turn point onto l
};

struct TurnCode {
  Direction direction;
  std::vector<Turn> turns;

  CyclicWord word() const;
  /// Sign of the motion along l just before turn k.
  int heading_before(std::size_t k) const;
};

inline constexpr double kTangencyEps = 1e-9;

struct Genericity {
  bool generic = false;
  std::string reason;
  std::optional<std::size_t> sample;
};

/// Tests whether f(t) = velocity(t) . u has only simple, isolated sign changes
/// on the samples. Crossings closer than `min_separation` samples are
/// rejected; the minimum meaningful value is 1.
Genericity check_direction(const SampledCurve& curve, Direction l, double min_separation = 1.0);

/// Draws candidate directions deterministically from `seed` and returns the
/// first generic one.
Direction choose_generic_direction(const SampledCurve& curve, int trials, std::uint64_t seed,
                                   double min_separation = 1.0);

TurnCode extract_turn_code(const SampledCurve& curve, Direction l, double min_separation = 1.0);

/// (count L - count R) / 2.
int code_turning_number(const TurnCode& code);

}  // namespace wg
