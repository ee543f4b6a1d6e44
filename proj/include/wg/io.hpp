#pragma once

#include <cstddef>
#include <string>

#include <json.hpp>

#include "wg/curve.hpp"
#include "wg/flatten.hpp"
#include "wg/invariant.hpp"
#include "wg/rewrite.hpp"

namespace wg::io {

using nlohmann::json;

/// `{"n": N, "points": [[x,y],...], "velocities": [[x,y],...]}`.
json curve_to_json(const SampledCurve& curve, bool with_velocities = true);
/// Missing velocities are estimated by finite differences. With `validate`
/// false the curve is taken as-is (used for homotopy frames).
SampledCurve curve_from_json(const json& j, bool validate = true);

/// Array of curve objects; a frame with a note carries a "note" field.
json path_to_json(const HomotopyPath& path);
/// Accepts the array form or `{"frames": [...]}`.
HomotopyPath path_from_json(const json& j);

json report_to_json(const VerificationReport& report);

json turn_code_to_json(const TurnCode& code);
TurnCode turn_code_from_json(const json& j);

/// One JSON object per line: the rewrite events, then a terminal line.
std::string trace_to_jsonl(const ReductionTrace& trace);
ReductionTrace trace_from_jsonl(const std::string& text);

std::string read_file(const std::string& path);
/// Writes through a temporary sibling file and renames it into place.
void write_file_atomic(const std::string& path, const std::string& contents);

/// `.curve` files hold DSL text sampled at `n`; anything else is curve JSON.
SampledCurve load_curve(const std::string& path, std::size_t n);

}  // namespace wg::io
