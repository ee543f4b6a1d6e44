#pragma once

#include <string>
#include <vector>

#include "wg/curve.hpp"
#include "wg/invariant.hpp"

namespace wg {

struct RenderConfig {
  double frame_size = 160.0;  ///< pixels per frame cell
  double stroke_width = 1.5;
  int frames_per_row = 8;
  bool arrow_marks = true;  ///< velocity ticks every N/16 samples

  /// Throws InvalidArgument unless every dimension is positive.
  void validate() const;
};

/// Frame strip: one closed path per frame, laid out row by row. Output bytes
/// depend only on the frames and the config.
std::string render_svg(const std::vector<SampledCurve>& frames, const RenderConfig& config = {});
std::string render_svg(const HomotopyPath& path, const RenderConfig& config = {});
std::string render_svg(const SampledCurve& curve, const RenderConfig& config = {});

}  // namespace wg
