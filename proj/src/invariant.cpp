#include "wg/invariant.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wg {

AngleLift angle_lift(const SampledCurve& curve) {
  const std::size_t n = curve.size();
  if (n == 0) throw CurveError(ErrorKind::InvalidArgument, "empty curve");
  AngleLift lift;
  lift.theta.resize(n + 1);
  lift.increments.resize(n);
  const Point2 v0 = curve.velocity(0);
  lift.theta[0] = std::atan2(v0.y, v0.x);
  for (std::size_t i = 0; i < n; ++i) {
    const double inc = signed_angle(curve.velocity(i), curve.velocity((i + 1) % n));
    if (!(std::abs(inc) < SampledCurve::kMaxAngleStep))
      throw CurveError(ErrorKind::Undersampled,
                       "tangent angle step at sample " + std::to_string(i) + " is " +
                           std::to_string(inc),
                       i);
    lift.increments[i] = inc;
    lift.theta[i + 1] = lift.theta[i] + inc;
  }
  return lift;
}

int turning_number(const SampledCurve& curve) {
  const auto lift = angle_lift(curve);
  const double turns = lift.total() / kTwoPi;
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) >= kTolInt)
    throw CurveError(ErrorKind::InconsistentLift,
                     "tangent lift closes at " + std::to_string(turns) + " turns");
  return static_cast<int>(rounded);
}

HomotopyPath::HomotopyPath(std::vector<SampledCurve> frames, std::vector<std::string> notes)
    : frames_(std::move(frames)), notes_(std::move(notes)) {
  if (frames_.size() < 2)
    throw CurveError(ErrorKind::InvalidArgument,
                     "a homotopy path needs at least 2 frames, got " +
                         std::to_string(frames_.size()));
  const std::size_t n = frames_.front().size();
  for (std::size_t f = 1; f < frames_.size(); ++f)
    if (frames_[f].size() != n)
      throw CurveError(ErrorKind::InvalidArgument,
                       "frame " + std::to_string(f) + " has " +
                           std::to_string(frames_[f].size()) + " samples, expected " +
                           std::to_string(n),
                       f);
  notes_.resize(frames_.size());
}

HomotopyPath HomotopyPath::reversed() const {
  HomotopyPath out(std::vector<SampledCurve>(frames_.rbegin(), frames_.rend()),
                   std::vector<std::string>(notes_.rbegin(), notes_.rend()));
  out.source = target;
  out.target = source;
  return out;
}

void HomotopyPath::append(const HomotopyPath& next, double tolerance) {
  if (next.samples() != samples())
    throw CurveError(ErrorKind::InvalidArgument, "cannot join paths with different sample counts");
  const double gap = max_position_gap(back(), next.front());
  if (!(gap <= tolerance))
    throw CurveError(ErrorKind::InternalInconsistency,
                     "junction mismatch " + std::to_string(gap) + " exceeds " +
                         std::to_string(tolerance));
  if (!notes_.back().empty() && !next.notes_.front().empty())
    notes_.back() += "; " + next.notes_.front();
  else if (notes_.back().empty())
    notes_.back() = next.notes_.front();
  for (std::size_t f = 1; f < next.size(); ++f) {
    frames_.push_back(next.frames_[f]);
    notes_.push_back(next.notes_[f]);
  }
  target = next.target;
}

void HomotopyPath::annotate(std::size_t frame, std::string note) {
  notes_.at(frame) = std::move(note);
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << (pass ? "PASS" : "FAIL");
  for (const auto& c : checks) {
    os << "\n  " << c.name << ": " << (c.pass ? "ok" : "failed");
    if (c.frame) os << " frame=" << *c.frame;
    if (c.sample) os << " sample=" << *c.sample;
    if (c.value) os << " value=" << *c.value;
  }
  return os.str();
}

namespace {

void fail(Check& check, std::size_t frame, std::optional<std::size_t> sample, double value) {
  if (!check.pass) return;
  check.pass = false;
  check.frame = frame;
  check.sample = sample;
  check.value = value;
}

}  // namespace

VerificationReport verify_homotopy(const HomotopyPath& path) {
  Check regular, adequate, position, angle, turning;
  regular.name = "regularity";
  adequate.name = "adequacy";
  position.name = "position-continuity";
  angle.name = "angle-continuity";
  turning.name = "turning-number";

  const std::size_t frames = path.size();
  std::vector<std::optional<int>> numbers(frames);
  for (std::size_t f = 0; f < frames; ++f) {
    const auto& c = path.frame(f);
    const std::size_t n = c.size();
    const double min_speed = SampledCurve::kMinSpeed * c.scale();
    bool ok = n >= SampledCurve::kMinSamples && c.scale() > 0.0;
    if (!ok) fail(regular, f, std::nullopt, c.scale());
    for (std::size_t i = 0; ok && i < n; ++i) {
      const double speed = norm(c.velocity(i));
      if (!is_finite(c.point(i)) || !(speed >= min_speed)) {
        fail(regular, f, i, speed);
        ok = false;
      }
    }
    for (std::size_t i = 0; ok && i < n; ++i) {
      const double inc = signed_angle(c.velocity(i), c.velocity((i + 1) % n));
      if (!(std::abs(inc) < SampledCurve::kMaxAngleStep)) {
        fail(adequate, f, i, inc);
        ok = false;
      }
    }
    if (!ok) continue;
    try {
      numbers[f] = turning_number(c);
    } catch (const CurveError&) {
      fail(turning, f, std::nullopt, 0.0);
    }
  }

  for (std::size_t f = 0; f + 1 < frames; ++f) {
    const auto& a = path.frame(f);
    const auto& b = path.frame(f + 1);
    const double bound = kDeltaPos * std::max(a.scale(), b.scale());
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double d = norm(b.point(i) - a.point(i));
      if (!(d <= bound)) {
        fail(position, f + 1, i, d);
        break;
      }
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double d = std::abs(signed_angle(a.velocity(i), b.velocity(i)));
      if (!(d <= kDeltaAng)) {
        fail(angle, f + 1, i, d);
        break;
      }
    }
  }

  std::optional<int> reference;
  for (std::size_t f = 0; f < frames; ++f) {
    if (!numbers[f]) continue;
    if (!reference) {
      reference = numbers[f];
    } else if (*numbers[f] != *reference) {
      fail(turning, f, std::nullopt, *numbers[f]);
      break;
    }
  }

  VerificationReport report;
  report.checks = {regular, adequate, position, angle, turning};
  report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const Check& c) { return c.pass; });
  return report;
}

}  // namespace wg
