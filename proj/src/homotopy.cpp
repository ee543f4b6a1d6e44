#include "wg/homotopy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>

namespace wg {

namespace {

bool fixable_by_refinement(const VerificationReport& report) {
  for (const char* name : {"regularity", "adequacy", "turning-number"})
    if (const Check* c = report.find(name); c && !c->pass) return false;
  return true;
}

double eta_at(const SampledCurve& curve, Direction l, double t) {
  const std::size_t n = curve.size();
  double tau = std::fmod(t, kTwoPi);
  if (tau < 0) tau += kTwoPi;
  const double pos = tau / curve.step();
  const double base = std::floor(pos);
  const double s = pos - base;
  const auto i = static_cast<std::size_t>(base) % n;
  const Point2 a = curve.point(i), b = curve.point((i + 1) % n);
  return dot((1 - s) * a + s * b, l.across());
}

std::string pair_label(IndexPair p) {
  return std::to_string(p.first) + "," + std::to_string(p.second);
}

}  // namespace

HomotopyPath refine_stage(const std::function<SampledCurve(double)>& frame_at,
                          const std::string& note, std::size_t max_frames) {
  const SampledCurve first = frame_at(0.0);
  const SampledCurve last = frame_at(1.0);
  VerificationReport report;
  for (std::size_t intervals = 1; intervals <= std::max<std::size_t>(1, max_frames);
       intervals *= 2) {
    std::vector<SampledCurve> frames;
    frames.reserve(intervals + 1);
    frames.push_back(first);
    for (std::size_t k = 1; k < intervals; ++k)
      frames.push_back(frame_at(static_cast<double>(k) / static_cast<double>(intervals)));
    frames.push_back(last);
    HomotopyPath path(std::move(frames));
    report = verify_homotopy(path);
    if (report.pass) {
      path.annotate(0, note);
      return path;
    }
    if (!fixable_by_refinement(report)) break;
  }
  throw SynthesisError("stage '" + note + "' failed verification", report);
}

HomotopyPath straight_morph(const SampledCurve& a, const SampledCurve& b, const std::string& note,
                            std::size_t max_frames) {
  if (a.size() != b.size())
    throw CurveError(ErrorKind::InvalidArgument, "morph endpoints differ in sample count");
  return refine_stage(
      [&](double s) {
        if (s == 0.0) return a;
        if (s == 1.0) return b;
        std::vector<Point2> pts(a.size()), vel(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
          pts[i] = (1 - s) * a.point(i) + s * b.point(i);
          vel[i] = (1 - s) * a.velocity(i) + s * b.velocity(i);
        }
        return SampledCurve::unchecked(std::move(pts), std::move(vel));
      },
      note, max_frames);
}

TurnCode code_from_word(const CyclicWord& word, Direction l) {
  TurnCode code;
  code.direction = l;
  const std::size_t m = word.size();
  for (std::size_t k = 0; k < m; ++k) {
    const double side = (k % 2 == 0) ? 1.0 : -1.0;
    code.turns.push_back(
        {word[k], kTwoPi * (static_cast<double>(k) + 0.5) / static_cast<double>(m), side});
  }
  return code;
}

TurnRunCurve realize_code(const TurnCode& code, std::size_t n, const std::vector<double>& lanes,
                          const std::vector<double>& half_widths) {
  const std::size_t m = code.turns.size();
  if (m < 2 || m % 2 != 0)
    throw CurveError(ErrorKind::InvalidArgument, "turn code needs even length >= 2");
  if (!lanes.empty() && lanes.size() != m)
    throw CurveError(ErrorKind::InvalidArgument, "one lane per turn required");
  if (!half_widths.empty() && half_widths.size() != m)
    throw CurveError(ErrorKind::InvalidArgument, "one cap width per turn required");

  TurnRunCurve out;
  out.direction = code.direction;
  out.first_heading = code.heading_before(0);
  std::vector<double> rho(m), half(m);
  for (std::size_t k = 0; k < m; ++k) {
    const auto& prev = code.turns[(k + m - 1) % m];
    const auto& here = code.turns[k];
    const auto& next = code.turns[(k + 1) % m];
    if (code.heading_before(k) != out.first_heading * (k % 2 == 0 ? 1 : -1))
      throw CurveError(ErrorKind::InvalidArgument,
                       "turn coordinates do not alternate at turn " + std::to_string(k), k);
    rho[k] = 0.25 * std::min(std::abs(here.x - prev.x), std::abs(next.x - here.x));
    const double gap_prev = k == 0 ? here.t + kTwoPi - prev.t : here.t - prev.t;
    const double gap_next = k + 1 == m ? next.t + kTwoPi - here.t : next.t - here.t;
    half[k] = half_widths.empty() ? 0.4 * std::min(gap_prev, gap_next)
                                  : std::min(half_widths[k], 0.45 * std::min(gap_prev, gap_next));
    if (!(rho[k] > 0) || !(half[k] > 0))
      throw CurveError(ErrorKind::InvalidArgument,
                       "turns " + std::to_string(k) + " and a neighbour coincide", k);
  }
  const double spacing = 3.0 * *std::max_element(rho.begin(), rho.end());
  for (std::size_t k = 0; k < m; ++k) {
    const auto& turn = code.turns[k];
    const double s = out.heading(k);
    const double rise = sign_of(turn.dir) * s;
    const double lane =
        lanes.empty() ? spacing * (static_cast<double>(k) - 0.5 * static_cast<double>(m - 1))
                      : lanes[k];
    out.caps.push_back({turn.x - s * rho[k], lane - rise * rho[k], lane + rise * rho[k],
                        turn.t - half[k], turn.t + half[k]});
  }
  out.validate();
  (void)out.sample(n);
  return out;
}

Flattening flatten(const SampledCurve& curve, Direction l, const SynthesisOptions& options) {
  validate_curve(curve);
  const std::size_t n = curve.size();
  TurnCode code = extract_turn_code(curve, l, options.min_separation);

  const Point2 across = l.across();
  double lo = std::numeric_limits<double>::infinity(), hi = -lo, mean = 0.0;
  for (const auto& p : curve.points()) {
    const double e = dot(p, across);
    lo = std::min(lo, e);
    hi = std::max(hi, e);
    mean += e;
  }
  mean /= static_cast<double>(n);
  const double extent = hi - lo;
  const double target_factor =
      extent > 0 ? std::min(1.0, kSquashExtent * curve.scale() / extent) : 1.0;

  auto squashed_by = [&](double f) {
    std::vector<Point2> pts(n), vel(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Point2 p = curve.point(i), v = curve.velocity(i);
      pts[i] = p + ((f - 1.0) * (dot(p, across) - mean)) * across;
      vel[i] = v + ((f - 1.0) * dot(v, across)) * across;
    }
    return SampledCurve::unchecked(std::move(pts), std::move(vel));
  };
  // Squashing sharpens the turns; stop where the samples still resolve them.
  auto resolved = [&](double f) {
    const SampledCurve c = squashed_by(f);
    if (check_curve(c)) return false;
    for (std::size_t i = 0; i < n; ++i)
      if (std::abs(signed_angle(c.velocity(i), c.velocity((i + 1) % n))) > kSquashMaxStep)
        return false;
    return true;
  };
  double final_factor = target_factor;
  if (!resolved(final_factor)) {
    double good = 1.0, bad = final_factor;
    for (int it = 0; it < 30; ++it) {
      const double mid = 0.5 * (good + bad);
      (resolved(mid) ? good : bad) = mid;
    }
    final_factor = good;
  }

  auto squash = [&](double s) {
    if (s == 0.0) return curve;
    const double f = 1.0 - s * (1.0 - final_factor);
    std::vector<Point2> pts(n), vel(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Point2 p = curve.point(i), v = curve.velocity(i);
      pts[i] = p + ((f - 1.0) * (dot(p, across) - mean)) * across;
      vel[i] = v + ((f - 1.0) * dot(v, across)) * across;
    }
    return SampledCurve::unchecked(std::move(pts), std::move(vel));
  };

  std::optional<HomotopyPath> path;
  SampledCurve squashed = curve;
  if (final_factor < 1.0 - 1e-9) {
    path = refine_stage(squash, "squash across l", options.max_frames);
    squashed = path->back();
  }

  std::vector<double> lanes;
  for (const auto& turn : code.turns) lanes.push_back(eta_at(squashed, l, turn.t));
  // Push every turn outward along its heading so that no run is short; nearly
  // coincident turns would otherwise get tiny caps.
  TurnCode spread = code;
  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  for (const auto& turn : code.turns) {
    x_lo = std::min(x_lo, turn.x);
    x_hi = std::max(x_hi, turn.x);
  }
  for (std::size_t k = 0; k < spread.turns.size(); ++k)
    spread.turns[k].x += kTurnSpread * (x_hi - x_lo) * code.heading_before(k);
  TurnRunCurve flat = realize_code(spread, n, lanes);
  HomotopyPath morph = straight_morph(squashed, flat.sample(n), "flatten to turn-run curve",
                                      options.max_frames);
  if (path)
    path->append(morph, 0.0);
  else
    path = std::move(morph);
  return {std::move(*path), std::move(code), std::move(flat)};
}

HomotopyPath flatten_homotopy(const SampledCurve& curve, Direction l) {
  return flatten(curve, l).path;
}

namespace {

struct Frame {
  double xi_mid, half_width, eta_mid;
};

Frame layout_frame(const TurnRunCurve& c) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo, eta = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    lo = std::min({lo, c.caps[k].x, c.tangency(k)});
    hi = std::max({hi, c.caps[k].x, c.tangency(k)});
    eta += c.caps[k].center();
  }
  return {0.5 * (lo + hi), std::max(0.5 * (hi - lo), 1e-9), eta / static_cast<double>(c.size())};
}

/// Layout in which caps i and i+1 form a Z between caps i-1 and i+2, the
/// whole stretch rising monotonically across l in the Z's rise direction.
TurnRunCurve cancellation_layout(const TurnRunCurve& c, std::size_t i) {
  const std::size_t m = c.size();
  const Frame f = layout_frame(c);
  const double unit = f.half_width;
  const double rho = 0.1 * unit;
  const double rise = (c.caps[i].y_out > c.caps[i].y_in) ? 1.0 : -1.0;
  auto cap_rise = [&](std::size_t k) { return sign_of(c.letter(k)) * c.heading(k); };
  auto level = [&](double v) { return f.eta_mid + rise * rho * v; };

  TurnRunCurve out = c;
  for (std::size_t k = 0; k < m; ++k) {
    out.caps[k].x = f.xi_mid + c.heading(k) * unit;
    const double r = cap_rise(k);
    const double centre = level(7.0 + 3.0 * static_cast<double>((k + m - i - 3) % m));
    out.caps[k].y_in = centre - r * rho;
    out.caps[k].y_out = centre + r * rho;
  }
  const std::size_t before = (i + m - 1) % m, j = (i + 1) % m, after = (i + 2) % m;
  out.caps[i].x = f.xi_mid + 0.5 * c.heading(i) * unit;
  out.caps[j].x = f.xi_mid + 0.5 * c.heading(j) * unit;
  out.caps[i].y_in = level(-2.5);
  out.caps[i].y_out = level(-0.5);
  out.caps[j].y_in = level(0.5);
  out.caps[j].y_out = level(2.5);
  out.caps[before].y_out = level(-4.0);
  out.caps[before].y_in = level(-4.0) - 2.0 * cap_rise(before) * rho;
  out.caps[after].y_in = level(4.0);
  out.caps[after].y_out = level(4.0) + 2.0 * cap_rise(after) * rho;

  // Re-time the Z so its caps and middle run share one speed; the cancel morph
  // blends that run against an opposing velocity and needs it continuous.
  const double wrap = (j == 0) ? kTwoPi : 0.0;
  const double a = c.caps[i].t0, b = c.caps[j].t1 + wrap;
  const double q = kPi * rho / (2.0 * kPi * rho + unit);
  out.caps[i].t0 = a;
  out.caps[i].t1 = a + q * (b - a);
  out.caps[j].t0 = b - q * (b - a) - wrap;
  out.caps[j].t1 = b - wrap;
  out.validate();
  return out;
}

}  // namespace

Cancellation realize_cancellation(const TurnRunCurve& curve, IndexPair pair, std::size_t n,
                                  std::size_t max_frames) {
  curve.validate();
  const std::size_t m = curve.size();
  const auto [i, j] = pair;
  if (m <= 2 || i >= m || j != (i + 1) % m || curve.letter(i) == curve.letter(j))
    throw CurveError(ErrorKind::InvalidArgument,
                     "turns " + pair_label(pair) + " are not cancellable in " + curve.word().str());

  const TurnRunCurve layout = cancellation_layout(curve, i);
  HomotopyPath path = refine_stage(
      [&](double s) { return lerp(curve, layout, s).sample_unchecked(n); },
      "pull ends " + pair_label(pair), max_frames);
  const std::size_t pull_end = path.size() - 1;

  TurnRunCurve shorter = layout.without_pair(i);
  path.append(straight_morph(layout.sample(n), shorter.sample(n),
                             "cancel turns " + pair_label(pair), max_frames),
              0.0);
  return {std::move(path), pull_end, std::move(shorter)};
}

namespace {

/// Turn-run layout with the same structure as `c` whose caps sit at the turns
/// of `target` (tangency points and parameters).
TurnRunCurve align_to(const TurnRunCurve& c, const SampledCurve& target, const TurnCode& code) {
  const std::size_t m = c.size();
  if (code.turns.size() != m)
    throw CurveError(ErrorKind::InternalInconsistency,
                     "target has " + std::to_string(code.turns.size()) + " turns, curve has " +
                         std::to_string(m));
  std::optional<std::size_t> best_offset;
  double best_cost = std::numeric_limits<double>::infinity();
  double best_shift = 0.0;
  for (std::size_t o = 0; o < m; ++o) {
    bool match = true;
    for (std::size_t k = 0; k < m && match; ++k)
      match = c.letter(k) == code.turns[(k + o) % m].dir &&
              c.heading(k) == code.heading_before((k + o) % m);
    if (!match) continue;
    for (int wrap = -2; wrap <= 2; ++wrap) {
      double cost = 0.0;
      for (std::size_t k = 0; k < m; ++k) {
        const double tau = code.turns[(k + o) % m].t + kTwoPi * static_cast<double>((k + o) / m) +
                           kTwoPi * wrap;
        cost += std::abs(tau - c.caps[k].mid_param());
      }
      if (cost < best_cost) {
        best_cost = cost;
        best_offset = o;
        best_shift = kTwoPi * wrap;
      }
    }
  }
  if (!best_offset)
    throw CurveError(ErrorKind::InternalInconsistency,
                     "no cyclic alignment between " + c.word().str() + " and target turns");

  TurnCode aligned;
  aligned.direction = c.direction;
  std::vector<double> lanes;
  for (std::size_t k = 0; k < m; ++k) {
    Turn t = code.turns[(k + *best_offset) % m];
    t.t += kTwoPi * static_cast<double>((k + *best_offset) / m) + best_shift;
    lanes.push_back(eta_at(target, c.direction, t.t));
    aligned.turns.push_back(t);
  }
  // realize_code reads headings from the coordinates, which the alignment
  // already matched; parameters may leave [0, 2*pi) but stay increasing.
  TurnRunCurve out = realize_code(aligned, target.size(), lanes);
  if (out.first_heading != c.first_heading)
    throw CurveError(ErrorKind::InternalInconsistency, "alignment changed the heading");
  return out;
}

struct Gamma0Plan {
  SampledCurve target;
  TurnCode code;
  double back_angle;
  CanonicalIndex final_index;
};

Gamma0Plan plan_gamma0(Direction l, int heading_before_l, std::size_t n) {
  const SampledCurve eight = make_gamma(GammaK{0}, n);
  for (double side : {-1.0, 1.0}) {
    const double theta = l.angle() + side * kPi / 2;
    SampledCurve rotated = transform(eight, AffineMap::rotation(theta));
    TurnCode code = extract_turn_code(rotated, l);
    if (code.turns.size() != 2) continue;
    const std::size_t li = code.turns[0].dir == Letter::L ? 0 : 1;
    if (code.heading_before(li) != heading_before_l) continue;
    const double to_plain = wrap_angle(-theta);
    const double to_primed = wrap_angle(kPi - theta);
    if (std::abs(to_plain) <= std::abs(to_primed))
      return {std::move(rotated), std::move(code), to_plain, GammaK{0}};
    return {std::move(rotated), std::move(code), to_primed, Gamma0Primed{}};
  }
  throw CurveError(ErrorKind::InternalInconsistency, "figure-eight alignment failed");
}

HomotopyPath rotate_onto(const SampledCurve& from, double angle, const SampledCurve& onto,
                         const std::string& note, std::size_t max_frames) {
  const SampledCurve rotated = transform(from, AffineMap::rotation(angle));
  const double gap = max_position_gap(rotated, onto);
  if (!(gap <= kJunctionTol * onto.scale()))
    throw CurveError(ErrorKind::InternalInconsistency,
                     "rotation misses its target by " + std::to_string(gap));
  return refine_stage(
      [&](double s) {
        if (s == 0.0) return from;
        if (s == 1.0) return onto;
        return transform(from, AffineMap::rotation(s * angle));
      },
      note, max_frames);
}

}  // namespace

CanonicalIndex resolve_gamma0(Direction l, int heading_before_l) {
  return plan_gamma0(l, heading_before_l, 256).final_index;
}

CanonicalIndex resolve_gamma0(const TurnCode& code, const Reduction& reduction) {
  if (reduction.terminal_word.size() != 2 ||
      reduction.terminal_word[0] == reduction.terminal_word[1])
    return reduction.index;
  std::vector<std::size_t> alive(code.turns.size());
  std::iota(alive.begin(), alive.end(), 0);
  for (const auto& e : reduction.trace.steps) {
    if (e.kind != TraceEvent::Kind::Cancel) continue;
    std::vector<std::size_t> next;
    for (std::size_t k = 0; k < alive.size(); ++k)
      if (k != e.positions.first && k != e.positions.second) next.push_back(alive[k]);
    alive = std::move(next);
  }
  for (std::size_t k : alive)
    if (code.turns[k].dir == Letter::L) return resolve_gamma0(code.direction, code.heading_before(k));
  throw CurveError(ErrorKind::InternalInconsistency, "terminal LR word lost its L turn");
}

Assembly assemble_canonical(const TurnRunCurve& curve, std::size_t n, std::size_t max_frames) {
  curve.validate();
  const CyclicWord word = curve.word();
  if (find_cancellable(word))
    throw CurveError(ErrorKind::InvalidArgument, "word " + word.str() + " is not terminal");
  const int k = word.turning_number();
  const Direction l = curve.direction;

  if (k != 0) {
    const CanonicalIndex index = GammaK{k};
    const SampledCurve target = make_gamma(index, n);
    const TurnRunCurve aligned = align_to(curve, target, extract_turn_code(target, l));
    HomotopyPath path = refine_stage(
        [&](double s) { return lerp(curve, aligned, s).sample_unchecked(n); },
        "align caps with " + to_string(index), max_frames);
    path.append(straight_morph(aligned.sample(n), target, "assemble " + to_string(index),
                               max_frames),
                0.0);
    return {std::move(path), index};
  }

  const std::size_t li = curve.letter(0) == Letter::L ? 0 : 1;
  Gamma0Plan plan = plan_gamma0(l, curve.heading(li), n);
  const TurnRunCurve aligned = align_to(curve, plan.target, plan.code);
  HomotopyPath path =
      refine_stage([&](double s) { return lerp(curve, aligned, s).sample_unchecked(n); },
                   "align caps with figure-eight", max_frames);
  path.append(straight_morph(aligned.sample(n), plan.target, "assemble figure-eight", max_frames),
              0.0);
  const SampledCurve final_curve = make_gamma(plan.final_index, n);
  path.append(rotate_onto(plan.target, plan.back_angle, final_curve,
                          "rotate to " + to_string(plan.final_index), max_frames),
              0.0);
  return {std::move(path), plan.final_index};
}

HomotopyPath rotation_homotopy(const SampledCurve& curve, double angle, std::size_t frames) {
  if (frames < 2) throw CurveError(ErrorKind::InvalidArgument, "rotation needs >= 2 frames");
  const Point2 c = centroid(curve);
  std::vector<SampledCurve> out;
  out.reserve(frames);
  out.push_back(curve);
  for (std::size_t k = 1; k < frames; ++k) {
    const double s = static_cast<double>(k) / static_cast<double>(frames - 1);
    const auto map = AffineMap::rotation(s * angle, c);
    std::vector<Point2> pts(curve.size()), vel(curve.size());
    for (std::size_t i = 0; i < curve.size(); ++i) {
      pts[i] = map.apply(curve.point(i));
      vel[i] = map.apply_linear(curve.velocity(i));
    }
    out.push_back(SampledCurve::unchecked(std::move(pts), std::move(vel)));
  }
  HomotopyPath path(std::move(out));
  path.annotate(0, "rotate by " + std::to_string(angle));
  return path;
}

CanonicalForm canonicalize(const SampledCurve& curve, const SynthesisOptions& options) {
  validate_curve(curve);
  const std::size_t n = curve.size();
  const Direction l =
      choose_generic_direction(curve, options.trials, options.seed, options.min_separation);
  Flattening flat = flatten(curve, l, options);
  Reduction reduction = reduce(flat.code.word());

  HomotopyPath path = std::move(flat.path);
  std::vector<std::size_t> keyframes{0, path.size() - 1};
  TurnRunCurve current = flat.flat;
  for (const auto& event : reduction.trace.steps) {
    if (event.kind != TraceEvent::Kind::Cancel) continue;
    Cancellation c = realize_cancellation(current, event.positions, n, options.max_frames);
    const std::size_t offset = path.size() - 1;
    path.append(c.path, 0.0);
    keyframes.push_back(offset + c.pull_end);
    keyframes.push_back(path.size() - 1);
    current = std::move(c.result);
  }
  Assembly assembly = assemble_canonical(current, n, options.max_frames);
  path.append(assembly.path, 0.0);
  keyframes.push_back(path.size() - 1);
  path.source = "input";
  path.target = to_string(assembly.index);
  return {std::move(path), assembly.index, std::move(flat.code), std::move(reduction),
          std::move(keyframes)};
}

HomotopyPath synthesize_homotopy(const SampledCurve& a, const SampledCurve& b,
                                 const SynthesisOptions& options) {
  validate_curve(a);
  validate_curve(b);
  const int ra = turning_number(a), rb = turning_number(b);
  if (ra != rb) throw ClassMismatchError(ra, rb);
  const SampledCurve target = b.size() == a.size() ? b : resample(b, a.size());
  const double tol = kJunctionTol * std::max(a.scale(), target.scale());

  if (max_position_gap(a, target) <= tol) {
    HomotopyPath path({a, target});
    path.annotate(0, "constant");
    return path;
  }

  // Half-turn shortcut: b is a rotated by pi about its centroid.
  const Point2 c = centroid(a);
  const SampledCurve half_turn = transform(a, AffineMap::rotation(kPi, c));
  if (max_position_gap(half_turn, target) <= 1e-9 * a.scale()) {
    return refine_stage(
        [&](double s) {
          if (s == 0.0) return a;
          if (s == 1.0) return target;
          return transform(a, AffineMap::rotation(s * kPi, c));
        },
        "rotate by pi", options.max_frames);
  }

  CanonicalForm from_a = canonicalize(a, options);
  CanonicalForm from_b = canonicalize(target, options);
  HomotopyPath path = std::move(from_a.path);
  if (!(from_a.index == from_b.index)) {
    const SampledCurve ga = make_gamma(from_a.index, a.size());
    const SampledCurve gb = make_gamma(from_b.index, a.size());
    path.append(rotate_onto(ga, kPi, gb, "rotate gamma(0) by pi", options.max_frames), 0.0);
  }
  path.append(from_b.path.reversed(), 0.0);
  path.source = "a";
  path.target = "b";
  return path;
}

}  // namespace wg
