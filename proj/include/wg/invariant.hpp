#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wg/curve.hpp"

namespace wg {

inline constexpr double kTolInt = 1e-3;
inline constexpr double kDeltaPos = 0.05;
inline constexpr double kDeltaAng = kPi / 8;

/// Continuous tangent angle over one traversal. theta has N + 1 entries;
/// theta[N] closes the loop.
struct AngleLift {
  std::vector<double> theta;
  std::vector<double> increments;

  double total() const { return theta.back() - theta.front(); }
};

AngleLift angle_lift(const SampledCurve& curve);

/// Degree of t -> velocity(t) / |velocity(t)|, counterclockwise positive.
int turning_number(const SampledCurve& curve);

/// Discretized regular homotopy: a frame sequence with equal sample counts.
class HomotopyPath {
 public:
  HomotopyPath(std::vector<SampledCurve> frames, std::vector<std::string> notes = {});

  std::size_t size() const { return frames_.size(); }
  const std::vector<SampledCurve>& frames() const { return frames_; }
  const SampledCurve& frame(std::size_t i) const { return frames_[i]; }
  const SampledCurve& front() const { return frames_.front(); }
  const SampledCurve& back() const { return frames_.back(); }
  const std::vector<std::string>& notes() const { return notes_; }
  std::size_t samples() const { return frames_.front().size(); }

  std::string source;
  std::string target;

  /// Same frames in opposite order.
  HomotopyPath reversed() const;
  /// Appends `next`, whose first frame must coincide with this path's last
  /// frame to within `tolerance` (absolute); the duplicate junction is dropped.
  void append(const HomotopyPath& next, double tolerance);
  void annotate(std::size_t frame, std::string note);

 private:
  std::vector<SampledCurve> frames_;
  std::vector<std::string> notes_;
};

struct Check {
  std::string name;
  bool pass = true;
  std::optional<std::size_t> frame;
  std::optional<std::size_t> sample;
  std::optional<double> value;
};

struct VerificationReport {
  bool pass = true;
  std::vector<Check> checks;

  const Check* find(const std::string& name) const;
  std::string summary() const;
};

/// Checks per-frame regularity and sampling adequacy, inter-frame continuity
/// of positions (kDeltaPos * scale) and tangent angles (kDeltaAng), and
/// constancy of the turning number across frames.
VerificationReport verify_homotopy(const HomotopyPath& path);

}  // namespace wg
