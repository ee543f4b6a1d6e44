#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wg/curve.hpp"
#include "wg/flatten.hpp"
#include "wg/invariant.hpp"
#include "wg/rewrite.hpp"
#include "wg/turn_run.hpp"

namespace wg {

/// Perpendicular extent reached by the squash stage, relative to curve scale.
inline constexpr double kSquashExtent = 0.1;
/// Largest sample-to-sample tangent rotation the squash stage may create.
inline constexpr double kSquashMaxStep = kPi / 4;
/// Outward shift of turn coordinates in the flattened curve, relative to the
/// spread of the turns along l.
inline constexpr double kTurnSpread = 0.25;
/// Largest frame count tried per stage while refining.
inline constexpr std::size_t kMaxStageFrames = 1024;
/// Allowed junction mismatch between stages, relative to curve scale.
inline constexpr double kJunctionTol = 1e-6;

class SynthesisError : public CurveError {
 public:
  SynthesisError(const std::string& what, VerificationReport report)
      : CurveError(ErrorKind::SynthesisFailure, what), report_(std::move(report)) {}
  const VerificationReport& report() const { return report_; }

 private:
  VerificationReport report_;
};

class ClassMismatchError : public CurveError {
 public:
  ClassMismatchError(int a, int b)
      : CurveError(ErrorKind::ClassMismatch, std::to_string(a) + " != " + std::to_string(b)),
        a_(a),
        b_(b) {}
  int first() const { return a_; }
  int second() const { return b_; }

 private:
  int a_, b_;
};

struct SynthesisOptions {
  std::uint64_t seed = 1;
  int trials = 256;
  /// Minimum spacing of tangencies, in samples, demanded of the direction l.
  /// Caps of the flattened curve need room for several samples each.
  double min_separation = 8.0;
  std::size_t max_frames = kMaxStageFrames;
};

/// Builds frames at s = k / (F - 1) for F - 1 = 1, 2, 4, ... up to
/// `max_frames` and returns the first sequence that passes verify_homotopy.
HomotopyPath refine_stage(const std::function<SampledCurve(double)>& frame_at,
                          const std::string& note, std::size_t max_frames = kMaxStageFrames);

/// Frames (1 - s) * a + s * b on positions and velocities.
HomotopyPath straight_morph(const SampledCurve& a, const SampledCurve& b, const std::string& note,
                            std::size_t max_frames = kMaxStageFrames);

/// Abstract code for a bare word: turns evenly spaced in t, alternating
/// between xi = +1 and xi = -1.
TurnCode code_from_word(const CyclicWord& word, Direction l = {});

/// Turn-run curve with the code's letters, turn parameters and tangency
/// coordinates. `lanes` optionally fixes the eta coordinate of each cap and
/// `half_widths` the parameter half-width of each cap; by default lanes are
/// spaced uniformly and caps take 0.4 of the smaller neighbouring gap.
TurnRunCurve realize_code(const TurnCode& code, std::size_t n,
                          const std::vector<double>& lanes = {},
                          const std::vector<double>& half_widths = {});

struct Flattening {
  HomotopyPath path;
  TurnCode code;
  TurnRunCurve flat;
};

Flattening flatten(const SampledCurve& curve, Direction l,
                   const SynthesisOptions& options = {});
HomotopyPath flatten_homotopy(const SampledCurve& curve, Direction l);

struct Cancellation {
  HomotopyPath path;
  /// Index of the frame that ends the pull phase.
  std::size_t pull_end = 0;
  TurnRunCurve result;
};

/// Pulls the curve into a layout where caps i and i+1 form a Z whose ends
/// project past each other, then straightens the Z.
Cancellation realize_cancellation(const TurnRunCurve& curve, IndexPair pair, std::size_t n,
                                  std::size_t max_frames = kMaxStageFrames);

struct Assembly {
  HomotopyPath path;
  CanonicalIndex index;
};

/// Morphs a curve with a terminal word (constant letters, or LR) into
/// make_gamma of its canonical index.
Assembly assemble_canonical(const TurnRunCurve& curve, std::size_t n,
                            std::size_t max_frames = kMaxStageFrames);

/// Which of gamma(0) / gamma(0') a terminal LR curve assembles into, given
/// the direction l and the heading before its L turn.
CanonicalIndex resolve_gamma0(Direction l, int heading_before_l);

/// Same, for a full reduction of an extracted code.
CanonicalIndex resolve_gamma0(const TurnCode& code, const Reduction& reduction);

/// Frame k rotates the curve about its centroid by angle * k / (frames - 1).
HomotopyPath rotation_homotopy(const SampledCurve& curve, double angle, std::size_t frames);

struct CanonicalForm {
  HomotopyPath path;
  CanonicalIndex index;
  TurnCode code;
  Reduction reduction;
  /// Frames where a stage begins or ends: start, end of flattening, then the
  /// end of each pull and each cancellation, then the end of assembly.
  std::vector<std::size_t> keyframes;
};

/// Regular homotopy from `curve` to its canonical representative.
CanonicalForm canonicalize(const SampledCurve& curve, const SynthesisOptions& options = {});

/// Regular homotopy from a to b. Throws ClassMismatchError when the turning
/// numbers differ.
HomotopyPath synthesize_homotopy(const SampledCurve& a, const SampledCurve& b,
                                 const SynthesisOptions& options = {});

}  // namespace wg
