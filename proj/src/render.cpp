#include "wg/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace wg {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  // Avoid "-0.000" so that equal geometry prints identically.
  if (std::string_view(buf) == "-0.000") return "0.000";
  return buf;
}

}  // namespace

void RenderConfig::validate() const {
  if (!(frame_size > 0) || !(stroke_width > 0) || frames_per_row <= 0)
    throw CurveError(ErrorKind::InvalidArgument, "render dimensions must be positive");
}

std::string render_svg(const std::vector<SampledCurve>& frames, const RenderConfig& config) {
  config.validate();
  if (frames.empty()) throw CurveError(ErrorKind::InvalidArgument, "nothing to render");

  // One shared scale for the strip so that frames are comparable.
  double lo_x = std::numeric_limits<double>::infinity(), hi_x = -lo_x, lo_y = lo_x, hi_y = -lo_x;
  for (const auto& f : frames)
    for (const auto& p : f.points()) {
      lo_x = std::min(lo_x, p.x);
      hi_x = std::max(hi_x, p.x);
      lo_y = std::min(lo_y, p.y);
      hi_y = std::max(hi_y, p.y);
    }
  const double extent = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
  const double margin = 0.1 * config.frame_size;
  const double k = (config.frame_size - 2 * margin) / extent;
  const double cx = 0.5 * (lo_x + hi_x), cy = 0.5 * (lo_y + hi_y);

  const std::size_t per_row = static_cast<std::size_t>(config.frames_per_row);
  const std::size_t cols = std::min(per_row, frames.size());
  const std::size_t rows = (frames.size() + per_row - 1) / per_row;
  const double width = config.frame_size * static_cast<double>(cols);
  const double height = config.frame_size * static_cast<double>(rows);

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" +
         fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t f = 0; f < frames.size(); ++f) {
    const double ox = config.frame_size * static_cast<double>(f % per_row) + 0.5 * config.frame_size;
    const double oy = config.frame_size * static_cast<double>(f / per_row) + 0.5 * config.frame_size;
    auto map = [&](Point2 p) { return Point2{ox + k * (p.x - cx), oy - k * (p.y - cy)}; };

    const auto& c = frames[f];
    out += "<g id=\"frame-" + std::to_string(f) + "\">\n<path d=\"";
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Point2 q = map(c.point(i));
      out += (i == 0 ? "M" : " L") + fmt(q.x) + " " + fmt(q.y);
    }
    out += " Z\" fill=\"none\" stroke=\"black\" stroke-width=\"" + fmt(config.stroke_width) +
           "\"/>\n";
    if (config.arrow_marks) {
      const std::size_t every = std::max<std::size_t>(1, c.size() / 16);
      const double tick = 0.06 * config.frame_size;
      for (std::size_t i = 0; i < c.size(); i += every) {
        const Point2 v = c.velocity(i);
        const double len = norm(v);
        if (!(len > 0)) continue;
        const Point2 a = map(c.point(i));
        const Point2 b{a.x + tick * v.x / len, a.y - tick * v.y / len};
        out += "<line x1=\"" + fmt(a.x) + "\" y1=\"" + fmt(a.y) + "\" x2=\"" + fmt(b.x) +
               "\" y2=\"" + fmt(b.y) + "\" stroke=\"crimson\" stroke-width=\"" +
               fmt(config.stroke_width) + "\"/>\n";
      }
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string render_svg(const HomotopyPath& path, const RenderConfig& config) {
  return render_svg(path.frames(), config);
}

std::string render_svg(const SampledCurve& curve, const RenderConfig& config) {
  return render_svg(std::vector<SampledCurve>{curve}, config);
}

}  // namespace wg
