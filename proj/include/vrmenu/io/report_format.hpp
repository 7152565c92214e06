#pragma once

#include <string>
#include <string_view>

#include "vrmenu/editor/editor.hpp"
#include "vrmenu/error.hpp"
#include "vrmenu/io/json_util.hpp"
#include "vrmenu/layout/layout.hpp"
#include "vrmenu/usability/usability.hpp"

// JSON forms of computed results. The CLI and the HTTP service both emit
// dump(to_json(x)), so identical inputs give byte-identical bodies.
namespace vrmenu::io {

Json to_json(const layout::Transform& t);
Json to_json(const layout::LayoutResult& layout);
Json to_json(const usability::UsabilityReport& report);
Json to_json(const usability::SimulationResult& result);
// { "revision", "createdIds", "warnings", "changedIds" }
Json edit_summary_json(const editor::EditOutcome& outcome);
// { "error": <code name>, "message", "violations": [{ "kind", "nodeId", "detail" }] }
Json error_json(const Error& error);
Json violations_json(const std::vector<core::Violation>& violations);
// { "left", "right", "meanMTRatio": right/left }
Json compare_json(const usability::UsabilityReport& left, const usability::UsabilityReport& right);

// "a,b"
usability::FittsParams parse_params(std::string_view text);
// "x,y,z,dx,dy,dz"
usability::ViewerConfig parse_viewer(std::string_view text);

}  // namespace vrmenu::io
