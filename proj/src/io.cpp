#include "wg/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "wg/dsl.hpp"

namespace wg::io {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw CurveError(ErrorKind::InvalidArgument, msg); }

json point_json(Point2 p) { return json::array({p.x, p.y}); }

std::vector<Point2> points_from(const json& j, const char* field) {
  if (!j.is_array()) bad(std::string("'") + field + "' must be an array");
  std::vector<Point2> out;
  out.reserve(j.size());
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
      bad(std::string("'") + field + "' entries must be [x, y] number pairs");
    out.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return out;
}

}  // namespace

json curve_to_json(const SampledCurve& curve, bool with_velocities) {
  json pts = json::array(), vel = json::array();
  for (std::size_t i = 0; i < curve.size(); ++i) {
    pts.push_back(point_json(curve.point(i)));
    if (with_velocities) vel.push_back(point_json(curve.velocity(i)));
  }
  json j = {{"n", curve.size()}, {"points", std::move(pts)}};
  if (with_velocities) j["velocities"] = std::move(vel);
  return j;
}

SampledCurve curve_from_json(const json& j, bool validate) {
  if (!j.is_object()) bad("curve must be a JSON object");
  if (!j.contains("points")) bad("curve is missing 'points'");
  std::vector<Point2> pts = points_from(j.at("points"), "points");
  if (j.contains("n")) {
    if (!j.at("n").is_number_unsigned() || j.at("n").get<std::size_t>() != pts.size())
      bad("'n' does not match the number of points");
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (!is_finite(pts[i])) throw CurveError(ErrorKind::InvalidArgument, "non-finite point", i);
  if (!j.contains("velocities")) {
    if (!validate) bad("homotopy frames need explicit velocities");
    return SampledCurve::from_positions(std::move(pts));
  }
  std::vector<Point2> vel = points_from(j.at("velocities"), "velocities");
  if (vel.size() != pts.size()) bad("'velocities' and 'points' differ in length");
  if (validate) return SampledCurve::make(std::move(pts), std::move(vel));
  return SampledCurve::unchecked(std::move(pts), std::move(vel));
}

json path_to_json(const HomotopyPath& path) {
  json out = json::array();
  for (std::size_t f = 0; f < path.size(); ++f) {
    json frame = curve_to_json(path.frame(f));
    if (f < path.notes().size() && !path.notes()[f].empty()) frame["note"] = path.notes()[f];
    out.push_back(std::move(frame));
  }
  return out;
}

HomotopyPath path_from_json(const json& j) {
  const json* frames = &j;
  if (j.is_object() && j.contains("frames")) frames = &j.at("frames");
  if (!frames->is_array()) bad("homotopy path must be an array of curves");
  std::vector<SampledCurve> curves;
  std::vector<std::string> notes;
  for (const auto& f : *frames) {
    curves.push_back(curve_from_json(f, false));
    notes.push_back(f.is_object() && f.contains("note") && f.at("note").is_string()
                        ? f.at("note").get<std::string>()
                        : std::string());
  }
  return HomotopyPath(std::move(curves), std::move(notes));
}

json report_to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json item = {{"name", c.name}, {"pass", c.pass}};
    if (c.frame) item["frame"] = *c.frame;
    if (c.sample) item["sample"] = *c.sample;
    if (c.value) item["value"] = *c.value;
    checks.push_back(std::move(item));
  }
  return {{"pass", report.pass}, {"checks", std::move(checks)}};
}

json turn_code_to_json(const TurnCode& code) {
  json turns = json::array();
  for (const auto& t : code.turns)
    turns.push_back({{"dir", std::string(1, static_cast<char>(t.dir))}, {"t", t.t}, {"x", t.x}});
  return {{"direction", json::array({code.direction.ux(), code.direction.uy()})},
          {"turns", std::move(turns)}};
}

TurnCode turn_code_from_json(const json& j) {
  if (!j.is_object() || !j.contains("direction") || !j.contains("turns"))
    bad("turn code needs 'direction' and 'turns'");
  const auto dir = points_from(json::array({j.at("direction")}), "direction");
  TurnCode code;
  code.direction = Direction(dir[0].x, dir[0].y);
  if (!j.at("turns").is_array()) bad("'turns' must be an array");
  for (const auto& t : j.at("turns")) {
    if (!t.is_object() || !t.contains("dir") || !t.at("dir").is_string())
      bad("turn needs a string 'dir'");
    const std::string d = t.at("dir").get<std::string>();
    if (d != "L" && d != "R") bad("turn 'dir' must be \"L\" or \"R\"");
    if (!t.contains("t") || !t.at("t").is_number() || !t.contains("x") || !t.at("x").is_number())
      bad("turn needs numeric 't' and 'x'");
    code.turns.push_back({d == "L" ? Letter::L : Letter::R, t.at("t").get<double>(),
                          t.at("x").get<double>()});
  }
  return code;
}

std::string trace_to_jsonl(const ReductionTrace& trace) {
  std::string out;
  for (const auto& e : trace.steps) {
    const json line = {{"event", to_string(e.kind)},
                       {"positions", json::array({e.positions.first, e.positions.second})},
                       {"before", e.before},
                       {"after", e.after}};
    out += line.dump() + "\n";
  }
  json last = {{"terminal", to_string(trace.terminal)}};
  if (!trace.note.empty()) last["note"] = trace.note;
  out += last.dump() + "\n";
  return out;
}

ReductionTrace trace_from_jsonl(const std::string& text) {
  ReductionTrace trace;
  std::istringstream in(text);
  std::string line;
  bool terminal = false;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      bad(std::string("malformed trace line: ") + e.what());
    }
    if (!j.is_object()) bad("trace lines must be JSON objects");
    try {
      if (j.contains("terminal")) {
        const auto index = parse_index(j.at("terminal").get<std::string>());
        if (!index) bad("unknown terminal index");
        trace.terminal = *index;
        trace.note = j.value("note", "");
        terminal = true;
        continue;
      }
      TraceEvent e;
      const std::string kind = j.value("event", "");
      if (kind == "pull-ends")
        e.kind = TraceEvent::Kind::PullEnds;
      else if (kind == "cancel")
        e.kind = TraceEvent::Kind::Cancel;
      else
        bad("unknown trace event '" + kind + "'");
      const auto& pos = j.at("positions");
      e.positions = {pos.at(0).get<std::size_t>(), pos.at(1).get<std::size_t>()};
      e.before = j.value("before", "");
      e.after = j.value("after", "");
      trace.steps.push_back(std::move(e));
    } catch (const json::exception& e) {
      bad(std::string("malformed trace line: ") + e.what());
    }
  }
  if (!terminal) bad("trace has no terminal line");
  return trace;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) bad("cannot write '" + path + "'");
    out << contents;
    out.flush();
    if (!out) {
      std::remove(tmp.c_str());
      bad("cannot write '" + path + "'");
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    bad("cannot move output into '" + path + "'");
  }
}

SampledCurve load_curve(const std::string& path, std::size_t n) {
  const std::string text = read_file(path);
  if (path.size() >= 6 && path.compare(path.size() - 6, 6, ".curve") == 0)
    return dsl::sample_expr(dsl::parse_curve(text), n);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad("'" + path + "' is not valid JSON: " + e.what());
  }
  return curve_from_json(j);
}

}  // namespace wg::io
