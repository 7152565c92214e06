#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "vrmenu/core/model.hpp"
#include "vrmenu/layout/layout.hpp"
#include "vrmenu/math.hpp"

namespace vrmenu::usability {

// MT = a + b * ID. Defaults give MT in index-of-difficulty units.
struct FittsParams {
  double a = 0.0;  // seconds
  double b = 1.0;  // seconds per bit
  friend bool operator==(const FittsParams&, const FittsParams&) = default;
};

// Ray pose before the selection movement starts, in the menu's frame.
struct ViewerConfig {
  Vec3 eye_position{};
  Vec3 start_direction{0.0, 0.0, -1.0};
  friend bool operator==(const ViewerConfig&, const ViewerConfig&) = default;
};

void check_params(const FittsParams& params);
void check_viewer(const ViewerConfig& viewer);

// log2(1 + 2D/W). Throws Error{kNonPositiveWidth} for W <= 0.
double index_of_difficulty(double distance, double width);
double movement_time(const FittsParams& params, double distance, double width);

enum class TargetShape {
  kPlanar,  // flat rectangle
  kArc,     // strip bent around a vertical axis through `arc_center` (Ring items)
};

// Angle swept by the ray while crossing the target along `approach`: the angle
// at the eye between the two rays through the target's edges on the line
// (planar) or curve (arc) through its centre in the approach direction.
// Throws Error{kBehindViewer} when the eye is not on the target's front side.
double angular_width(const ViewerConfig& viewer, const layout::Transform& target, const Vec3& approach,
                     TargetShape shape = TargetShape::kPlanar, const Vec3& arc_center = {});

// Angle between the start direction and the ray to the target centre.
double angular_distance(const ViewerConfig& viewer, const layout::Transform& target);

// Direction the ray travels when it reaches the target along the great circle
// from the start direction. When the target lies on (or opposite to) the start
// direction the great circle is undefined and `fallback` is used instead.
Vec3 approach_direction(const ViewerConfig& viewer, const layout::Transform& target, const Vec3& fallback);

struct ButtonUsability {
  core::ButtonId button_id;
  double distance = 0.0;  // D, radians
  double width = 0.0;     // W, radians
  double index_of_difficulty = 0.0;
  double movement_time = 0.0;
  friend bool operator==(const ButtonUsability&, const ButtonUsability&) = default;
};

struct UsabilityReport {
  core::MenuId menu_id;
  core::MenuType menu_type = core::MenuType::kList;
  std::string model;
  bool extrapolated = false;
  ViewerConfig viewer;
  FittsParams params;
  std::vector<ButtonUsability> per_button;
  double mean_mt = 0.0;
  double max_mt = 0.0;
  double mean_id = 0.0;
  std::vector<std::string> notes;
  friend bool operator==(const UsabilityReport&, const UsabilityReport&) = default;
};

// Eye at the frame origin looking at the menu centre (Ring: at button 0;
// Pie: along the bisector of sector 0 in the touchpad plane).
ViewerConfig default_viewer(const layout::LayoutResult& layout);

// Scores every button. Ray-cast menus use the angular model from the eye;
// Pie menus use the same formula in the touchpad plane around the thumb
// pivot (D = angle to the sector bisector, W = sector angle), which is an
// extrapolation and is marked as such in the report.
UsabilityReport menu_usability_report(const core::MenuNode& menu, const layout::LayoutResult& layout,
                                      const ViewerConfig& viewer, const FittsParams& params = {});

struct SimulationResult {
  core::MenuId menu_id;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double empirical_mean_mt = 0.0;
  double analytic_mean_mt = 0.0;
  double standard_error = 0.0;  // of the empirical mean under uniform targets
  std::vector<core::ButtonId> button_ids;
  std::vector<std::size_t> per_button_hits;
  friend bool operator==(const SimulationResult&, const SimulationResult&) = default;
};

// Monte-Carlo check of the closed-form report: draws `trials` targets
// uniformly with a generator seeded from `seed` and averages their MT.
// Throws Error{kInvalidArgument} for trials == 0 and Error{kEmptyMenu} for a
// menu without buttons.
SimulationResult simulate_selections(const core::MenuNode& menu, const layout::LayoutResult& layout,
                                     const ViewerConfig& viewer, const FittsParams& params, std::size_t trials,
                                     std::uint64_t seed);

}  // namespace vrmenu::usability
