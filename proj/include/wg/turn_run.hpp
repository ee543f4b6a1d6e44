#pragma once

#include <cstddef>
#include <vector>

#include "wg/curve.hpp"
#include "wg/flatten.hpp"
#include "wg/rewrite.hpp"

namespace wg {

/// A closed curve made of U-turn caps joined by runs that are monotone along
/// the direction l. Coordinates are (xi, eta) = (p . u, p . perp(u)).
///
/// Cap k is a half circle whose diameter is the vertical segment from
/// (x, y_in) to (x, y_out); it bulges toward heading(k), the direction of
/// motion along l before the turn. It occupies the parameter interval
/// [t0, t1]. Run k joins the exit of cap k to the entry of cap k+1 with xi
/// linear and eta following a smoothstep, so its velocity is horizontal at
/// both ends and never vanishes.
struct TurnRunCurve {
  struct Cap {
    double x = 0.0;
    double y_in = 0.0;
    double y_out = 0.0;
    double t0 = 0.0;
    double t1 = 0.0;

    double radius() const { return 0.5 * std::abs(y_out - y_in); }
    double center() const { return 0.5 * (y_in + y_out); }
    double mid_param() const { return 0.5 * (t0 + t1); }
  };

  Direction direction;
  int first_heading = 1;
  std::vector<Cap> caps;

  std::size_t size() const { return caps.size(); }
  int heading(std::size_t k) const { return (k % 2 == 0) ? first_heading : -first_heading; }
  Letter letter(std::size_t k) const;
  /// Coordinate along l of the extreme point of cap k.
  double tangency(std::size_t k) const { return caps[k].x + heading(k) * caps[k].radius(); }
  CyclicWord word() const;

  Point2 to_world(double xi, double eta) const;
  /// Position and parameter derivative at parameter t (taken mod 2*pi).
  std::pair<Point2, Point2> evaluate(double t) const;
  /// Validated SampledCurve at n uniform parameters.
  SampledCurve sample(std::size_t n) const;
  SampledCurve sample_unchecked(std::size_t n) const;

  /// Throws invalid-argument if caps, runs, or parameter intervals are
  /// inconsistent.
  void validate() const;

  /// Drops the adjacent caps i and (i + 1) mod size; the run through them is
  /// merged into one.
  TurnRunCurve without_pair(std::size_t i) const;
};

/// Component-wise linear interpolation of two curves with the same structure.
TurnRunCurve lerp(const TurnRunCurve& a, const TurnRunCurve& b, double s);

}  // namespace wg
