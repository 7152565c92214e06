#include "vrmenu/io/report_format.hpp"

#include <charconv>
#include <cmath>
#include <vector>

namespace vrmenu::io {

namespace {

Json vec_json(const Vec3& v) { return Json::array({v.x, v.y, v.z}); }

std::vector<double> parse_numbers(std::string_view text, std::size_t expected, const char* what) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string token(text.substr(start, end - start));
    try {
      std::size_t used = 0;
      const double v = std::stod(token, &used);
      if (used != token.size() || !std::isfinite(v)) {
        throw std::invalid_argument(token);
      }
      values.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument, std::string(what) + ": '" + token + "' is not a number");
    }
    start = end + 1;
  }
  if (values.size() != expected) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + ": expected " + std::to_string(expected) + " comma-separated numbers");
  }
  return values;
}

}  // namespace

Json to_json(const layout::Transform& t) {
  return Json{{"position", vec_json(t.position)},
              {"yaw", t.yaw},
              {"pitch", t.pitch},
              {"size", Json::array({t.size.width, t.size.height})}};
}

Json to_json(const layout::LayoutResult& layout) {
  Json buttons = Json::array();
  for (std::size_t i = 0; i < layout.buttons.size(); ++i) {
    buttons.push_back(Json{{"buttonId", layout.button_ids[i]}, {"transform", to_json(layout.buttons[i])}});
  }
  Json sectors = Json::array();
  for (const auto& s : layout.sectors) {
    sectors.push_back(Json{{"start", s.start}, {"end", s.end}});
  }
  return Json{{"menuId", layout.menu_id},
              {"menuType", std::string(core::to_string(layout.menu_type))},
              {"frame", std::string(layout::to_string(layout.frame))},
              {"title", to_json(layout.title)},
              {"buttons", std::move(buttons)},
              {"sectors", std::move(sectors)}};
}

Json to_json(const usability::UsabilityReport& report) {
  Json per_button = Json::array();
  for (const auto& b : report.per_button) {
    per_button.push_back(Json{{"buttonId", b.button_id},
                              {"D", b.distance},
                              {"W", b.width},
                              {"ID", b.index_of_difficulty},
                              {"MT", b.movement_time}});
  }
  return Json{{"menuId", report.menu_id},
              {"menuType", std::string(core::to_string(report.menu_type))},
              {"model", report.model},
              {"extrapolated", report.extrapolated},
              {"viewer",
               Json{{"eyePosition", vec_json(report.viewer.eye_position)},
                    {"startDirection", vec_json(report.viewer.start_direction)}}},
              {"params", Json{{"a", report.params.a}, {"b", report.params.b}}},
              {"perButton", std::move(per_button)},
              {"meanMT", report.mean_mt},
              {"maxMT", report.max_mt},
              {"meanID", report.mean_id},
              {"notes", report.notes}};
}

Json to_json(const usability::SimulationResult& result) {
  Json hits = Json::array();
  for (std::size_t i = 0; i < result.button_ids.size(); ++i) {
    hits.push_back(Json{{"buttonId", result.button_ids[i]}, {"hits", result.per_button_hits[i]}});
  }
  return Json{{"menuId", result.menu_id},
              {"trials", result.trials},
              {"seed", result.seed},
              {"empiricalMeanMT", result.empirical_mean_mt},
              {"analyticMeanMT", result.analytic_mean_mt},
              {"standardError", result.standard_error},
              {"perButtonHits", std::move(hits)}};
}

Json edit_summary_json(const editor::EditOutcome& outcome) {
  return Json{{"revision", outcome.document.revision},
              {"createdIds", outcome.created_ids},
              {"warnings", outcome.warnings},
              {"changedIds", outcome.changed_ids}};
}

Json violations_json(const std::vector<core::Violation>& violations) {
  Json out = Json::array();
  for (const auto& v : violations) {
    out.push_back(Json{{"kind", core::to_string(v.kind)}, {"nodeId", v.node_id}, {"detail", v.detail}});
  }
  return out;
}

Json error_json(const Error& error) {
  return Json{{"error", to_string(error.code())},
              {"message", error.what()},
              {"violations", violations_json(error.violations())}};
}

Json compare_json(const usability::UsabilityReport& left, const usability::UsabilityReport& right) {
  return Json{{"left", to_json(left)},
              {"right", to_json(right)},
              {"meanMTRatio", left.mean_mt > 0.0 ? Json(right.mean_mt / left.mean_mt) : Json(nullptr)}};
}

usability::FittsParams parse_params(std::string_view text) {
  const auto v = parse_numbers(text, 2, "params");
  usability::FittsParams params{v[0], v[1]};
  usability::check_params(params);
  return params;
}

usability::ViewerConfig parse_viewer(std::string_view text) {
  const auto v = parse_numbers(text, 6, "viewer");
  usability::ViewerConfig viewer{{v[0], v[1], v[2]}, {v[3], v[4], v[5]}};
  // Accept any non-zero direction; store it normalized.
  if (norm(viewer.start_direction) == 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "viewer: start direction must be non-zero");
  }
  viewer.start_direction = normalized(viewer.start_direction);
  return viewer;
}

}  // namespace vrmenu::io
