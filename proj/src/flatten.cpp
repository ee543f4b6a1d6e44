#include "wg/flatten.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "wg/invariant.hpp"

namespace wg {

Direction::Direction(double ux, double uy) {
  const double len = std::hypot(ux, uy);
  if (!std::isfinite(len) || len == 0.0)
    throw CurveError(ErrorKind::InvalidArgument, "direction must be a nonzero vector");
  u_ = {ux / len, uy / len};
}

CyclicWord TurnCode::word() const {
  std::vector<Letter> letters;
  letters.reserve(turns.size());
  for (const auto& t : turns) letters.push_back(t.dir);
  return CyclicWord(std::move(letters));
}

int TurnCode::heading_before(std::size_t k) const {
  const std::size_t m = turns.size();
  const double dx = turns[k].x - turns[(k + m - 1) % m].x;
  return dx > 0 ? 1 : -1;
}

namespace {

struct Crossing {
  std::size_t sample;  // interval start, or the zero sample itself
  bool on_sample;      // f vanishes at `sample`
  double position;     // in sample units
};

std::vector<int> classify(const SampledCurve& curve, Direction l) {
  const double eps = kTangencyEps * curve.scale();
  std::vector<int> cls(curve.size());
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const double f = dot(curve.velocity(i), l.along());
    cls[i] = std::abs(f) < eps ? 0 : (f > 0 ? 1 : -1);
  }
  return cls;
}

Genericity find_crossings(const SampledCurve& curve, Direction l, double min_separation,
                          std::vector<Crossing>& out) {
  const std::size_t n = curve.size();
  const auto cls = classify(curve, l);
  out.clear();
  for (std::size_t i = 0; i < n; ++i) {
    const int prev = cls[(i + n - 1) % n], here = cls[i], next = cls[(i + 1) % n];
    if (here == 0) {
      if (prev == 0 || next == 0 || prev == next)
        return {false, "ambiguous tangency at sample " + std::to_string(i), i};
      out.push_back({i, true, static_cast<double>(i)});
    } else if (next != 0 && next != here) {
      out.push_back({i, false, static_cast<double>(i) + 0.5});
    }
  }
  if (out.size() < 2) return {false, "fewer than two tangencies", std::nullopt};
  for (std::size_t k = 0; k < out.size(); ++k) {
    const double a = out[k].position;
    const double b = k + 1 < out.size() ? out[k + 1].position
                                        : out[0].position + static_cast<double>(n);
    if (b - a <= min_separation)
      return {false, "tangencies too close near sample " + std::to_string(out[k].sample),
              out[k].sample};
  }
  return {true, {}, std::nullopt};
}

}  // namespace

Genericity check_direction(const SampledCurve& curve, Direction l, double min_separation) {
  std::vector<Crossing> crossings;
  return find_crossings(curve, l, std::max(1.0, min_separation), crossings);
}

Direction choose_generic_direction(const SampledCurve& curve, int trials, std::uint64_t seed,
                                   double min_separation) {
  if (trials < 1) throw CurveError(ErrorKind::InvalidArgument, "trials must be >= 1");
  std::mt19937_64 rng(seed);
  for (int k = 0; k < trials; ++k) {
    // Fixed mapping from raw bits so the draw does not depend on the library's
    // distribution implementation.
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const auto l = Direction::from_angle(unit * kPi);
    if (check_direction(curve, l, min_separation).generic) return l;
  }
  throw CurveError(ErrorKind::NoGenericDirection,
                   "no generic direction found in " + std::to_string(trials) +
                       " trials; resample the curve finer");
}

TurnCode extract_turn_code(const SampledCurve& curve, Direction l, double min_separation) {
  std::vector<Crossing> crossings;
  const auto g = find_crossings(curve, l, std::max(1.0, min_separation), crossings);
  if (!g.generic) {
    const double t = g.sample ? curve.param(*g.sample) : 0.0;
    throw CurveError(ErrorKind::DegenerateTangency,
                     g.reason + " (t = " + std::to_string(t) + ")", g.sample);
  }
  const auto lift = angle_lift(curve);
  const std::size_t n = curve.size();
  const double h = curve.step();
  const Point2 u = l.along();

  TurnCode code;
  code.direction = l;
  for (const auto& c : crossings) {
    const std::size_t i = c.sample;
    Turn turn;
    if (c.on_sample) {
      const double rise = lift.increments[(i + n - 1) % n] + lift.increments[i];
      turn.dir = rise > 0 ? Letter::L : Letter::R;
      turn.t = curve.param(i);
      turn.x = dot(curve.point(i), u);
    } else {
      const std::size_t j = (i + 1) % n;
      const double fi = dot(curve.velocity(i), u), fj = dot(curve.velocity(j), u);
      const double s = fi / (fi - fj);
      turn.dir = lift.increments[i] > 0 ? Letter::L : Letter::R;
      turn.t = curve.param(i) + s * h;
      turn.x = (1 - s) * dot(curve.point(i), u) + s * dot(curve.point(j), u);
    }
    code.turns.push_back(turn);
  }
  return code;
}

int code_turning_number(const TurnCode& code) {
  int l = 0, r = 0;
  for (const auto& t : code.turns) (t.dir == Letter::L ? l : r)++;
  if ((l + r) % 2 != 0)
    throw CurveError(ErrorKind::InternalInconsistency,
                     "turn code has odd length " + std::to_string(l + r));
  return (l - r) / 2;
}

}  // namespace wg
