#include "wg/cli.hpp"

#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wg/dsl.hpp"
#include "wg/homotopy.hpp"
#include "wg/io.hpp"
#include "wg/render.hpp"

namespace wg {

namespace {

struct InputArgs {
  std::string expr;
  std::string file;
  std::vector<std::string> positional;
  std::size_t n = 512;
};

struct Settings {
  std::uint64_t seed = 1;
  std::size_t frames = kMaxStageFrames;
  bool json = false;
  std::string out;
  RenderConfig render;
};

/// A positional input is a canonical token (gamma(k), gamma0'), a file, or
/// DSL text.
SampledCurve load_token(const std::string& token, std::size_t n) {
  if (auto index = parse_index(token)) return make_gamma(*index, n);
  if (std::filesystem::exists(token)) return io::load_curve(token, n);
  if (token.find('=') != std::string::npos) return dsl::sample_expr(dsl::parse_curve(token), n);
  throw CurveError(ErrorKind::InvalidArgument, "no such input '" + token + "'");
}

std::vector<SampledCurve> load_inputs(const InputArgs& in) {
  std::vector<SampledCurve> curves;
  if (!in.expr.empty()) curves.push_back(dsl::sample_expr(dsl::parse_curve(in.expr), in.n));
  if (!in.file.empty()) curves.push_back(io::load_curve(in.file, in.n));
  for (const auto& token : in.positional) curves.push_back(load_token(token, in.n));
  return curves;
}

SampledCurve single_input(const InputArgs& in) {
  auto curves = load_inputs(in);
  if (curves.size() != 1)
    throw CurveError(ErrorKind::InvalidArgument, "expected exactly one input curve");
  return std::move(curves.front());
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoGenericDirection:
    case ErrorKind::DegenerateTangency: return kExitGenericity;
    case ErrorKind::ClassMismatch: return kExitClassMismatch;
    case ErrorKind::SynthesisFailure:
    case ErrorKind::InternalInconsistency: return kExitSynthesisFailure;
    default: return kExitInvalidInput;
  }
}

SynthesisOptions synthesis_options(const Settings& s) {
  SynthesisOptions o;
  o.seed = s.seed;
  o.max_frames = s.frames;
  return o;
}

int cmd_r(const InputArgs& in, const Settings& s, std::ostream& out) {
  const SampledCurve curve = single_input(in);
  const int r = turning_number(curve);
  if (s.json)
    out << io::json{{"turning_number", r}}.dump() << "\n";
  else
    out << r << "\n";
  return kExitOk;
}

int cmd_reduce(const InputArgs& in, const Settings& s, std::ostream& out) {
  const SampledCurve curve = single_input(in);
  const SynthesisOptions o = synthesis_options(s);
  const Direction l = choose_generic_direction(curve, o.trials, o.seed, o.min_separation);
  const TurnCode code = extract_turn_code(curve, l, o.min_separation);
  const CyclicWord word = code.word();
  const Reduction red = reduce(word);
  const bool ambiguous = !red.trace.note.empty();
  const CanonicalIndex index = ambiguous ? resolve_gamma0(code, red) : red.index;
  const std::size_t nl = word.count(Letter::L), nr = word.count(Letter::R);

  if (!s.out.empty()) io::write_file_atomic(s.out, io::trace_to_jsonl(red.trace));
  if (s.json) {
    io::json j = {{"index", to_string(index)},
                  {"L", nl},
                  {"R", nr},
                  {"word", word.str()},
                  {"code", io::turn_code_to_json(code)}};
    if (ambiguous) j["note"] = "gamma0-or-primed resolved by orientation";
    out << j.dump() << "\n";
    return kExitOk;
  }
  out << to_string(index) << ", L=" << nl << " R=" << nr << "\n";
  if (ambiguous) out << "note: gamma0-or-primed resolved by orientation\n";
  return kExitOk;
}

std::string svg_path_for(const std::string& out) {
  std::filesystem::path p(out);
  p.replace_extension(".svg");
  return p.string();
}

int cmd_homotopy(const InputArgs& in, const Settings& s, std::ostream& out, std::ostream& err) {
  const auto curves = load_inputs(in);
  if (curves.size() != 2)
    throw CurveError(ErrorKind::InvalidArgument, "homotopy needs exactly two input curves");
  try {
    const HomotopyPath path = synthesize_homotopy(curves[0], curves[1], synthesis_options(s));
    const VerificationReport report = verify_homotopy(path);
    if (!s.out.empty()) {
      io::write_file_atomic(s.out, io::path_to_json(path).dump() + "\n");
      // The strip shows at most 32 evenly spaced frames.
      std::vector<SampledCurve> shown;
      const std::size_t count = std::min<std::size_t>(32, path.size());
      for (std::size_t k = 0; k < count; ++k)
        shown.push_back(path.frame(k * (path.size() - 1) / std::max<std::size_t>(1, count - 1)));
      io::write_file_atomic(svg_path_for(s.out), render_svg(shown, s.render));
    }
    if (s.json) {
      out << io::json{{"frames", path.size()}, {"report", io::report_to_json(report)}}.dump()
          << "\n";
    } else {
      out << "frames: " << path.size() << "\n" << report.summary() << "\n";
    }
    return report.pass ? kExitOk : kExitSynthesisFailure;
  } catch (const ClassMismatchError& e) {
    out << e.what() << "\n";
    return kExitClassMismatch;
  } catch (const SynthesisError& e) {
    err << "error: " << e.what() << "\n";
    if (s.json)
      out << io::report_to_json(e.report()).dump() << "\n";
    else
      out << e.report().summary() << "\n";
    return kExitSynthesisFailure;
  }
}

io::json read_json_file(const std::string& path) {
  const std::string text = io::read_file(path);
  try {
    return io::json::parse(text);
  } catch (const io::json::parse_error& e) {
    throw CurveError(ErrorKind::InvalidArgument, "'" + path + "' is not valid JSON: " + e.what());
  }
}

int cmd_verify(const std::string& file, const Settings& s, std::ostream& out) {
  const HomotopyPath path = io::path_from_json(read_json_file(file));
  const VerificationReport report = verify_homotopy(path);
  if (s.json)
    out << io::report_to_json(report).dump() << "\n";
  else
    out << report.summary() << "\n";
  return report.pass ? kExitOk : kExitVerificationFailed;
}

int cmd_render(const InputArgs& in, const Settings& s, std::ostream& out) {
  if (s.out.empty()) throw CurveError(ErrorKind::InvalidArgument, "render needs --out");
  std::vector<SampledCurve> frames;
  const bool json_file =
      !in.file.empty() || (in.positional.size() == 1 && std::filesystem::exists(in.positional[0]) &&
                           std::filesystem::path(in.positional[0]).extension() == ".json");
  if (json_file && in.expr.empty()) {
    const std::string path = in.file.empty() ? in.positional[0] : in.file;
    const io::json j = read_json_file(path);
    if (j.is_array() || (j.is_object() && j.contains("frames")))
      frames = io::path_from_json(j).frames();
    else
      frames.push_back(io::curve_from_json(j));
  } else {
    frames = load_inputs(in);
  }
  io::write_file_atomic(s.out, render_svg(frames, s.render));
  out << "wrote " << frames.size() << " frame(s) to " << s.out << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classify closed plane curves up to regular homotopy", "wgc"};
  app.require_subcommand(1);

  InputArgs in;
  Settings s;
  std::string verify_file;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--expr", in.expr, "curve in DSL form: 'x = ...; y = ...'");
    sub->add_option("--file", in.file, "curve JSON or .curve DSL file");
    sub->add_option("--n", in.n, "samples per curve")->check(CLI::Range(16, 1 << 20));
    sub->add_flag("--json", s.json, "machine-readable output");
  };

  auto* r = app.add_subcommand("r", "print the turning number");
  add_input(r);
  r->add_option("input", in.positional, "gamma(k), gamma0', a file, or DSL text");

  auto* red = app.add_subcommand("reduce", "turn code and canonical form");
  add_input(red);
  red->add_option("input", in.positional, "gamma(k), gamma0', a file, or DSL text");
  red->add_option("--seed", s.seed, "seed for the direction search");
  red->add_option("--out", s.out, "write the reduction trace (JSON lines)");

  auto* hom = app.add_subcommand("homotopy", "synthesize a verified regular homotopy");
  add_input(hom);
  hom->add_option("inputs", in.positional, "source and target curves");
  hom->add_option("--seed", s.seed, "seed for the direction search");
  hom->add_option("--frames", s.frames, "frame limit per stage")->check(CLI::Range(1, 1 << 16));
  hom->add_option("--out", s.out, "path JSON output; the SVG strip goes next to it");

  auto* ver = app.add_subcommand("verify", "check a homotopy path file");
  ver->add_option("path", verify_file, "path JSON")->required();
  ver->add_flag("--json", s.json, "machine-readable output");

  auto* ren = app.add_subcommand("render", "draw a curve or path as an SVG strip");
  add_input(ren);
  ren->add_option("input", in.positional, "curve or path file, or a canonical token");
  ren->add_option("--out", s.out, "SVG output")->required();
  ren->add_option("--frame-size", s.render.frame_size, "pixels per frame");
  ren->add_option("--stroke-width", s.render.stroke_width, "stroke width");
  ren->add_option("--per-row", s.render.frames_per_row, "frames per row");
  bool no_arrows = false;
  ren->add_flag("--no-arrows", no_arrows, "omit velocity ticks");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  s.render.arrow_marks = !no_arrows;

  try {
    if (r->parsed()) return cmd_r(in, s, out);
    if (red->parsed()) return cmd_reduce(in, s, out);
    if (hom->parsed()) return cmd_homotopy(in, s, out, err);
    if (ver->parsed()) return cmd_verify(verify_file, s, out);
    if (ren->parsed()) return cmd_render(in, s, out);
  } catch (const CurveError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace wg
