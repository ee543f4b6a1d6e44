#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wg/error.hpp"
#include "wg/geometry.hpp"

namespace wg {

/// A closed plane curve stored as N uniform parameter samples t_i = 2*pi*i/N
/// of position and velocity.
///
/// Curves built through `make` are validated: N >= 16, every velocity is at
/// least kMinSpeed * scale long, and consecutive velocities differ by less
/// than kMaxAngleStep. `unchecked` skips validation and exists for data that
/// is about to be inspected by the homotopy verifier.
class SampledCurve {
 public:
  static constexpr std::size_t kMinSamples = 16;
  static constexpr double kMinSpeed = 1e-6;
  static constexpr double kMaxAngleStep = kPi / 2;

  static SampledCurve make(std::vector<Point2> points, std::vector<Point2> velocities);
  /// Velocities from centered circular finite differences.
  static SampledCurve from_positions(std::vector<Point2> points);
  static SampledCurve unchecked(std::vector<Point2> points, std::vector<Point2> velocities);

  std::size_t size() const { return points_.size(); }
  const std::vector<Point2>& points() const { return points_; }
  const std::vector<Point2>& velocities() const { return velocities_; }
  Point2 point(std::size_t i) const { return points_[i]; }
  Point2 velocity(std::size_t i) const { return velocities_[i]; }
  double scale() const { return scale_; }
  double step() const { return kTwoPi / static_cast<double>(size()); }
  double param(std::size_t i) const { return step() * static_cast<double>(i); }

 private:
  SampledCurve(std::vector<Point2> points, std::vector<Point2> velocities);

  std::vector<Point2> points_;
  std::vector<Point2> velocities_;
  double scale_ = 0.0;
};

/// Largest pairwise distance between the points (0 for fewer than 2 points).
double diameter(const std::vector<Point2>& points);

/// First violated invariant, if any. Never throws.
std::optional<CurveError> check_curve(const SampledCurve& curve);
/// Throws the first violated invariant.
void validate_curve(const SampledCurve& curve);

struct GammaK {
  int k = 0;
  friend bool operator==(GammaK, GammaK) = default;
};
struct Gamma0Primed {
  friend bool operator==(Gamma0Primed, Gamma0Primed) = default;
};
using CanonicalIndex = std::variant<GammaK, Gamma0Primed>;

/// Turning number carried by a canonical index.
int index_turning_number(const CanonicalIndex& index);
/// "gamma(k)" or "gamma(0')".
std::string to_string(const CanonicalIndex& index);
/// Inverse of to_string; also accepts "gammaK" and "gamma0'".
std::optional<CanonicalIndex> parse_index(std::string_view text);

/// k-fold circle for k != 0, figure-eight (sin 2t, sin t) for k = 0, and the
/// figure-eight with reversed parametrization for Gamma0Primed.
SampledCurve make_gamma(const CanonicalIndex& index, std::size_t n);

/// Traverses the curve backwards: i -> (N - i) mod N, velocities negated.
SampledCurve reverse(const SampledCurve& curve);

/// Positions through the full map, velocities through its linear part.
SampledCurve transform(const SampledCurve& curve, const AffineMap& map);

/// Closed cubic Hermite interpolation through the stored positions and
/// velocities, evaluated at n uniform parameters.
SampledCurve resample(const SampledCurve& curve, std::size_t n);

/// Cyclically shifts sample indices: result[i] = curve[(i + shift) mod N].
SampledCurve shift_samples(const SampledCurve& curve, std::size_t shift);

/// Maximum positional distance between corresponding samples.
double max_position_gap(const SampledCurve& a, const SampledCurve& b);

/// Smallest max_position_gap over all index shifts of `b`; returns the gap and
/// the shift achieving it.
std::pair<double, std::size_t> best_shift_gap(const SampledCurve& a, const SampledCurve& b);

Point2 centroid(const SampledCurve& curve);

}  // namespace wg
