#include "wg/turn_run.hpp"

#include <cmath>

namespace wg {

Letter TurnRunCurve::letter(std::size_t k) const {
  const int rise = caps[k].y_out > caps[k].y_in ? 1 : -1;
  return rise * heading(k) > 0 ? Letter::L : Letter::R;
}

CyclicWord TurnRunCurve::word() const {
  std::vector<Letter> letters;
  for (std::size_t k = 0; k < size(); ++k) letters.push_back(letter(k));
  return CyclicWord(std::move(letters));
}

Point2 TurnRunCurve::to_world(double xi, double eta) const {
  return xi * direction.along() + eta * direction.across();
}

std::pair<Point2, Point2> TurnRunCurve::evaluate(double t) const {
  const std::size_t m = caps.size();
  const double start = caps.front().t0;
  double tau = std::fmod(t - start, kTwoPi);
  if (tau < 0) tau += kTwoPi;
  tau += start;

  for (std::size_t k = 0; k < m; ++k) {
    const Cap& c = caps[k];
    const double next_t0 = k + 1 < m ? caps[k + 1].t0 : start + kTwoPi;
    if (tau <= c.t1) {
      const double span = c.t1 - c.t0;
      const double phi = -kPi / 2 + kPi * (tau - c.t0) / span;
      const double rho = c.radius();
      const double s = heading(k);
      const double rise = c.y_out > c.y_in ? 1.0 : -1.0;
      const double w = kPi / span;
      const Point2 p{c.x + s * rho * std::cos(phi), c.center() + rise * rho * std::sin(phi)};
      const Point2 v{-s * rho * std::sin(phi) * w, rise * rho * std::cos(phi) * w};
      return {to_world(p.x, p.y), to_world(v.x, v.y)};
    }
    if (tau < next_t0) {
      const Cap& d = caps[(k + 1) % m];
      const double span = next_t0 - c.t1;
      const double u = (tau - c.t1) / span;
      const double dx = d.x - c.x, dy = d.y_in - c.y_out;
      const Point2 p{c.x + dx * u, c.y_out + dy * u * u * (3 - 2 * u)};
      const Point2 v{dx / span, dy * 6 * u * (1 - u) / span};
      return {to_world(p.x, p.y), to_world(v.x, v.y)};
    }
  }
  // tau == start + 2*pi up to rounding: the start of cap 0.
  return evaluate(start);
}

SampledCurve TurnRunCurve::sample_unchecked(std::size_t n) const {
  std::vector<Point2> pts(n), vel(n);
  const double h = kTwoPi / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto [p, v] = evaluate(h * static_cast<double>(i));
    pts[i] = p;
    vel[i] = v;
  }
  return SampledCurve::unchecked(std::move(pts), std::move(vel));
}

SampledCurve TurnRunCurve::sample(std::size_t n) const {
  validate();
  auto curve = sample_unchecked(n);
  validate_curve(curve);
  return curve;
}

void TurnRunCurve::validate() const {
  const std::size_t m = caps.size();
  if (m < 2 || m % 2 != 0)
    throw CurveError(ErrorKind::InvalidArgument, "turn-run curve needs an even number >= 2 of caps");
  if (first_heading != 1 && first_heading != -1)
    throw CurveError(ErrorKind::InvalidArgument, "heading must be +1 or -1");
  for (std::size_t k = 0; k < m; ++k) {
    const Cap& c = caps[k];
    const double next_t0 = k + 1 < m ? caps[k + 1].t0 : caps[0].t0 + kTwoPi;
    if (!(c.t0 < c.t1 && c.t1 < next_t0))
      throw CurveError(ErrorKind::InvalidArgument,
                       "cap " + std::to_string(k) + " has a bad parameter interval", k);
    if (!(c.y_out != c.y_in))
      throw CurveError(ErrorKind::InvalidArgument, "cap " + std::to_string(k) + " is flat", k);
    const double dx = caps[(k + 1) % m].x - c.x;
    if (!(dx * -heading(k) > 0))
      throw CurveError(ErrorKind::InvalidArgument,
                       "run " + std::to_string(k) + " is not monotone along l", k);
  }
}

TurnRunCurve TurnRunCurve::without_pair(std::size_t i) const {
  const std::size_t m = caps.size();
  if (m <= 2 || i >= m)
    throw CurveError(ErrorKind::InvalidArgument, "cannot remove caps from this curve");
  const std::size_t j = (i + 1) % m;
  TurnRunCurve out;
  out.direction = direction;
  out.first_heading = (j == 0) ? -first_heading : first_heading;
  for (std::size_t k = 0; k < m; ++k)
    if (k != i && k != j) out.caps.push_back(caps[k]);
  return out;
}

TurnRunCurve lerp(const TurnRunCurve& a, const TurnRunCurve& b, double s) {
  if (a.size() != b.size() || a.first_heading != b.first_heading)
    throw CurveError(ErrorKind::InvalidArgument, "turn-run curves differ in structure");
  if (s == 0.0) return a;
  if (s == 1.0) return b;
  TurnRunCurve out = a;
  auto mix = [s](double x, double y) { return (1 - s) * x + s * y; };
  for (std::size_t k = 0; k < a.size(); ++k) {
    auto& c = out.caps[k];
    const auto& d = b.caps[k];
    c.x = mix(c.x, d.x);
    c.y_in = mix(c.y_in, d.y_in);
    c.y_out = mix(c.y_out, d.y_out);
    c.t0 = mix(c.t0, d.t0);
    c.t1 = mix(c.t1, d.t1);
  }
  return out;
}

}  // namespace wg
