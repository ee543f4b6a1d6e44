#include "wg/curve.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace wg {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::RegularityViolation: return "regularity-violation";
    case ErrorKind::Undersampled: return "undersampled";
    case ErrorKind::InconsistentLift: return "inconsistent-lift";
    case ErrorKind::NotClosed: return "not-closed";
    case ErrorKind::NoGenericDirection: return "no-generic-direction";
    case ErrorKind::DegenerateTangency: return "degenerate-tangency";
    case ErrorKind::InternalInconsistency: return "internal-inconsistency";
    case ErrorKind::ClassMismatch: return "class-mismatch";
    case ErrorKind::SynthesisFailure: return "synthesis-failure";
    case ErrorKind::Syntax: return "syntax-error";
    case ErrorKind::UnknownIdentifier: return "unknown-identifier";
  }
  return "unknown";
}

namespace {

std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(),
            [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

double diameter(const std::vector<Point2>& points) {
  for (const auto& p : points)
    if (!is_finite(p)) return std::numeric_limits<double>::quiet_NaN();
  const auto hull = convex_hull(points);
  double best = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i)
    for (std::size_t j = i + 1; j < hull.size(); ++j)
      best = std::max(best, norm(hull[i] - hull[j]));
  return best;
}

SampledCurve::SampledCurve(std::vector<Point2> points, std::vector<Point2> velocities)
    : points_(std::move(points)), velocities_(std::move(velocities)) {
  scale_ = diameter(points_);
}

SampledCurve SampledCurve::unchecked(std::vector<Point2> points, std::vector<Point2> velocities) {
  if (points.size() != velocities.size())
    throw CurveError(ErrorKind::InvalidArgument, "points and velocities differ in length");
  return SampledCurve(std::move(points), std::move(velocities));
}

SampledCurve SampledCurve::make(std::vector<Point2> points, std::vector<Point2> velocities) {
  auto curve = unchecked(std::move(points), std::move(velocities));
  validate_curve(curve);
  return curve;
}

SampledCurve SampledCurve::from_positions(std::vector<Point2> points) {
  const std::size_t n = points.size();
  if (n < kMinSamples)
    throw CurveError(ErrorKind::InvalidArgument,
                     "curve needs at least 16 samples, got " + std::to_string(n));
  const double h = kTwoPi / static_cast<double>(n);
  std::vector<Point2> vel(n);
  for (std::size_t i = 0; i < n; ++i)
    vel[i] = (1.0 / (2.0 * h)) * (points[(i + 1) % n] - points[(i + n - 1) % n]);
  return make(std::move(points), std::move(vel));
}

std::optional<CurveError> check_curve(const SampledCurve& curve) {
  const std::size_t n = curve.size();
  if (n < SampledCurve::kMinSamples)
    return CurveError(ErrorKind::InvalidArgument,
                      "curve needs at least 16 samples, got " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i)
    if (!is_finite(curve.point(i)) || !is_finite(curve.velocity(i)))
      return CurveError(ErrorKind::InvalidArgument,
                        "non-finite sample at index " + std::to_string(i), i);
  const double scale = curve.scale();
  if (!(scale > 0.0))
    return CurveError(ErrorKind::InvalidArgument, "curve has zero extent");
  const double min_speed = SampledCurve::kMinSpeed * scale;
  for (std::size_t i = 0; i < n; ++i)
    if (norm(curve.velocity(i)) < min_speed)
      return CurveError(ErrorKind::RegularityViolation,
                        "velocity vanishes at sample " + std::to_string(i), i);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = signed_angle(curve.velocity(i), curve.velocity((i + 1) % n));
    if (std::abs(a) >= SampledCurve::kMaxAngleStep)
      return CurveError(ErrorKind::Undersampled,
                        "velocity turns by " + std::to_string(a) + " rad between samples " +
                            std::to_string(i) + " and " + std::to_string((i + 1) % n),
                        i);
  }
  return std::nullopt;
}

void validate_curve(const SampledCurve& curve) {
  if (auto err = check_curve(curve)) throw *err;
}

int index_turning_number(const CanonicalIndex& index) {
  if (const auto* g = std::get_if<GammaK>(&index)) return g->k;
  return 0;
}

std::string to_string(const CanonicalIndex& index) {
  if (const auto* g = std::get_if<GammaK>(&index)) return "gamma(" + std::to_string(g->k) + ")";
  return "gamma(0')";
}

std::optional<CanonicalIndex> parse_index(std::string_view text) {
  if (text.substr(0, 5) != "gamma") return std::nullopt;
  text.remove_prefix(5);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')')
    text = text.substr(1, text.size() - 2);
  if (text == "0'") return Gamma0Primed{};
  int k = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (text.empty() || *first == '+') return std::nullopt;
  const auto [ptr, ec] = std::from_chars(first, last, k);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return GammaK{k};
}

SampledCurve make_gamma(const CanonicalIndex& index, std::size_t n) {
  if (n < SampledCurve::kMinSamples)
    throw CurveError(ErrorKind::InvalidArgument,
                     "sample count " + std::to_string(n) + " is below 16");
  std::vector<Point2> pts(n), vel(n);
  const double h = kTwoPi / static_cast<double>(n);
  if (const auto* g = std::get_if<GammaK>(&index); g && g->k != 0) {
    const int k = g->k;
    if (static_cast<std::size_t>(std::abs(k)) * 16 > n)
      throw CurveError(ErrorKind::InvalidArgument,
                       "sample count " + std::to_string(n) + " too small for k = " +
                           std::to_string(k));
    for (std::size_t i = 0; i < n; ++i) {
      const double a = k * h * static_cast<double>(i);
      pts[i] = {std::cos(a), std::sin(a)};
      vel[i] = {-k * std::sin(a), k * std::cos(a)};
    }
  } else {
    const double sign = std::holds_alternative<Gamma0Primed>(index) ? -1.0 : 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double t = h * static_cast<double>(i);
      pts[i] = {sign * std::sin(2 * t), sign * std::sin(t)};
      vel[i] = {sign * 2 * std::cos(2 * t), sign * std::cos(t)};
    }
  }
  return SampledCurve::make(std::move(pts), std::move(vel));
}

SampledCurve reverse(const SampledCurve& curve) {
  const std::size_t n = curve.size();
  std::vector<Point2> pts(n), vel(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (n - i) % n;
    pts[i] = curve.point(j);
    vel[i] = -curve.velocity(j);
  }
  return SampledCurve::unchecked(std::move(pts), std::move(vel));
}

SampledCurve transform(const SampledCurve& curve, const AffineMap& map) {
  const double det = map.determinant();
  if (!std::isfinite(det) || std::abs(det) < 1e-300)
    throw CurveError(ErrorKind::InvalidArgument, "affine map has a degenerate linear part");
  const std::size_t n = curve.size();
  std::vector<Point2> pts(n), vel(n);
  for (std::size_t i = 0; i < n; ++i) {
    pts[i] = map.apply(curve.point(i));
    vel[i] = map.apply_linear(curve.velocity(i));
  }
  return SampledCurve::make(std::move(pts), std::move(vel));
}

SampledCurve resample(const SampledCurve& curve, std::size_t n) {
  if (n < SampledCurve::kMinSamples)
    throw CurveError(ErrorKind::InvalidArgument,
                     "sample count " + std::to_string(n) + " is below 16");
  const std::size_t m = curve.size();
  const double h = kTwoPi / static_cast<double>(m);
  std::vector<Point2> pts(n), vel(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Exact rational position i*m/n to keep nodes that coincide bit-exact.
    const std::size_t num = i * m;
    const std::size_t j = num / n;
    const double s = static_cast<double>(num % n) / static_cast<double>(n);
    const Point2 p0 = curve.point(j), p1 = curve.point((j + 1) % m);
    const Point2 v0 = h * curve.velocity(j), v1 = h * curve.velocity((j + 1) % m);
    if (s == 0.0) {
      pts[i] = p0;
      vel[i] = curve.velocity(j);
      continue;
    }
    const double s2 = s * s, s3 = s2 * s;
    pts[i] = (2 * s3 - 3 * s2 + 1) * p0 + (s3 - 2 * s2 + s) * v0 + (-2 * s3 + 3 * s2) * p1 +
             (s3 - s2) * v1;
    const Point2 d = (6 * s2 - 6 * s) * p0 + (3 * s2 - 4 * s + 1) * v0 + (-6 * s2 + 6 * s) * p1 +
                     (3 * s2 - 2 * s) * v1;
    vel[i] = (1.0 / h) * d;
  }
  return SampledCurve::make(std::move(pts), std::move(vel));
}

SampledCurve shift_samples(const SampledCurve& curve, std::size_t shift) {
  const std::size_t n = curve.size();
  std::vector<Point2> pts(n), vel(n);
  for (std::size_t i = 0; i < n; ++i) {
    pts[i] = curve.point((i + shift) % n);
    vel[i] = curve.velocity((i + shift) % n);
  }
  return SampledCurve::unchecked(std::move(pts), std::move(vel));
}

double max_position_gap(const SampledCurve& a, const SampledCurve& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double gap = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) gap = std::max(gap, norm(a.point(i) - b.point(i)));
  return gap;
}

std::pair<double, std::size_t> best_shift_gap(const SampledCurve& a, const SampledCurve& b) {
  std::pair<double, std::size_t> best{std::numeric_limits<double>::infinity(), 0};
  if (a.size() != b.size()) return best;
  const std::size_t n = a.size();
  for (std::size_t s = 0; s < n; ++s) {
    double gap = 0.0;
    for (std::size_t i = 0; i < n && gap < best.first; ++i)
      gap = std::max(gap, norm(a.point(i) - b.point((i + s) % n)));
    if (gap < best.first) best = {gap, s};
  }
  return best;
}

Point2 centroid(const SampledCurve& curve) {
  Point2 c{};
  for (const auto& p : curve.points()) c = c + p;
  return (1.0 / static_cast<double>(curve.size())) * c;
}

}  // namespace wg
