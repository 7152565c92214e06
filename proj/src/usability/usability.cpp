#include "vrmenu/usability/usability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "vrmenu/error.hpp"

namespace vrmenu::usability {

namespace {

constexpr double kUnitTolerance = 1e-9;
constexpr double kDegenerateSin = 1e-12;

Vec3 arc_point(const layout::Transform& target, const Vec3& center, double arc_offset, double height_offset) {
  const Vec3 rel = target.position - center;
  const double radius = std::hypot(rel.x, rel.z);
  const double azimuth = std::atan2(rel.x, -rel.z);
  // Increasing azimuth moves along d/daz = (cos az, 0, sin az); orient the arc
  // offset so that positive values follow the target's right axis.
  const Vec3 tangent{std::cos(azimuth), 0.0, std::sin(azimuth)};
  const double sign = dot(tangent, layout::right_axis(target)) >= 0.0 ? 1.0 : -1.0;
  const double az = azimuth + sign * arc_offset / radius;
  const Vec3 up = layout::up_axis(target);
  return center + Vec3{radius * std::sin(az), rel.y, -radius * std::cos(az)} + up * height_offset;
}

}  // namespace

void check_params(const FittsParams& params) {
  if (!(params.b > 0.0) || !(params.a >= 0.0) || !std::isfinite(params.a) || !std::isfinite(params.b)) {
    throw Error(ErrorCode::kInvalidArgument, "Fitts parameters need a >= 0 and b > 0");
  }
}

void check_viewer(const ViewerConfig& viewer) {
  if (std::abs(norm(viewer.start_direction) - 1.0) > kUnitTolerance) {
    throw Error(ErrorCode::kInvalidArgument, "viewer start direction must have unit length");
  }
}

double index_of_difficulty(double distance, double width) {
  if (!(width > 0.0)) {
    throw Error(ErrorCode::kNonPositiveWidth, "target width must be positive");
  }
  if (!(distance >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "target distance must be non-negative");
  }
  return std::log2(1.0 + 2.0 * distance / width);
}

double movement_time(const FittsParams& params, double distance, double width) {
  return params.a + params.b * index_of_difficulty(distance, width);
}

double angular_width(const ViewerConfig& viewer, const layout::Transform& target, const Vec3& approach,
                     TargetShape shape, const Vec3& arc_center) {
  const Vec3 normal = layout::face_normal(target);
  if (dot(viewer.eye_position - target.position, normal) <= 0.0) {
    throw Error(ErrorCode::kBehindViewer, "target does not face the viewer");
  }
  const Vec3 right = layout::right_axis(target);
  const Vec3 up = layout::up_axis(target);

  // Approach direction expressed in the target's own surface.
  Vec3 along = approach - normal * dot(approach, normal);
  if (norm(along) < kDegenerateSin) {
    along = up;
  }
  along = normalized(along);
  const double along_right = dot(along, right);
  const double along_up = dot(along, up);

  double half_extent = std::numeric_limits<double>::infinity();
  if (std::abs(along_right) > kDegenerateSin) {
    half_extent = std::min(half_extent, (target.size.width / 2.0) / std::abs(along_right));
  }
  if (std::abs(along_up) > kDegenerateSin) {
    half_extent = std::min(half_extent, (target.size.height / 2.0) / std::abs(along_up));
  }

  Vec3 near_edge;
  Vec3 far_edge;
  if (shape == TargetShape::kArc) {
    near_edge = arc_point(target, arc_center, -half_extent * along_right, -half_extent * along_up);
    far_edge = arc_point(target, arc_center, half_extent * along_right, half_extent * along_up);
  } else {
    near_edge = target.position - along * half_extent;
    far_edge = target.position + along * half_extent;
  }
  return angle_between(near_edge - viewer.eye_position, far_edge - viewer.eye_position);
}

double angular_distance(const ViewerConfig& viewer, const layout::Transform& target) {
  const Vec3 to_target = target.position - viewer.eye_position;
  if (norm(to_target) == 0.0) {
    return 0.0;
  }
  return angle_between(viewer.start_direction, to_target);
}

Vec3 approach_direction(const ViewerConfig& viewer, const layout::Transform& target, const Vec3& fallback) {
  const Vec3 to_target = normalized(target.position - viewer.eye_position);
  const Vec3 start = normalized(viewer.start_direction);
  const double cos_d = dot(to_target, start);
  const Vec3 tangent = to_target * cos_d - start;
  if (norm(tangent) < 1e-9) {
    return normalized(fallback);
  }
  return normalized(tangent);
}

ViewerConfig default_viewer(const layout::LayoutResult& layout) {
  ViewerConfig viewer;
  switch (layout.menu_type) {
  case core::MenuType::kList:
  case core::MenuType::kMatrix: {
    if (layout.buttons.empty()) {
      viewer.start_direction = normalized(layout.title.position);
      break;
    }
    double min_x = layout.buttons.front().position.x, max_x = min_x;
    double min_y = layout.buttons.front().position.y, max_y = min_y;
    double sum_z = 0.0;
    for (const auto& t : layout.buttons) {
      min_x = std::min(min_x, t.position.x);
      max_x = std::max(max_x, t.position.x);
      min_y = std::min(min_y, t.position.y);
      max_y = std::max(max_y, t.position.y);
      sum_z += t.position.z;
    }
    const Vec3 center{(min_x + max_x) / 2.0, (min_y + max_y) / 2.0, sum_z / static_cast<double>(layout.buttons.size())};
    viewer.start_direction = normalized(center);
    break;
  }
  case core::MenuType::kRing:
    viewer.start_direction = layout.buttons.empty() ? Vec3{0.0, 0.0, -1.0} : normalized(layout.buttons.front().position);
    break;
  case core::MenuType::kPie: {
    const double bisector = layout.sectors.empty() ? 0.0 : (layout.sectors.front().start + layout.sectors.front().end) / 2.0;
    viewer.start_direction = {std::cos(bisector), std::sin(bisector), 0.0};
    break;
  }
  }
  if (norm(viewer.start_direction) == 0.0) {
    viewer.start_direction = {0.0, 0.0, -1.0};
  }
  return viewer;
}

namespace {

void finish_aggregates(UsabilityReport& report) {
  if (report.per_button.empty()) {
    return;
  }
  double sum_mt = 0.0;
  double sum_id = 0.0;
  for (const auto& b : report.per_button) {
    sum_mt += b.movement_time;
    sum_id += b.index_of_difficulty;
    report.max_mt = std::max(report.max_mt, b.movement_time);
  }
  const double n = static_cast<double>(report.per_button.size());
  report.mean_mt = sum_mt / n;
  report.mean_id = sum_id / n;
}

void score_pie(const layout::LayoutResult& layout, UsabilityReport& report) {
  const Vec3 start{report.viewer.start_direction.x, report.viewer.start_direction.y, 0.0};
  if (norm(start) == 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "pie start direction has no component in the touchpad plane");
  }
  const double start_angle = std::atan2(start.y, start.x);
  for (std::size_t i = 0; i < layout.buttons.size(); ++i) {
    const auto& sector = layout.sectors.at(i);
    const double bisector = (sector.start + sector.end) / 2.0;
    ButtonUsability b;
    b.button_id = layout.button_ids[i];
    b.distance = std::abs(wrap_angle(bisector - start_angle));
    b.width = sector.end - sector.start;
    b.index_of_difficulty = index_of_difficulty(b.distance, b.width);
    b.movement_time = report.params.a + report.params.b * b.index_of_difficulty;
    report.per_button.push_back(std::move(b));
  }
}

void score_ray_cast(const layout::LayoutResult& layout, UsabilityReport& report) {
  const bool ring = layout.menu_type == core::MenuType::kRing;
  for (std::size_t i = 0; i < layout.buttons.size(); ++i) {
    const layout::Transform& target = layout.buttons[i];
    // A target straight ahead has no great circle; sweep along the menu's
    // layout axis instead (vertical for List/Matrix, around the ring for Ring).
    const Vec3 fallback = ring ? layout::right_axis(target) : layout::up_axis(target);
    const Vec3 approach = approach_direction(report.viewer, target, fallback);
    ButtonUsability b;
    b.button_id = layout.button_ids[i];
    b.distance = angular_distance(report.viewer, target);
    b.width = angular_width(report.viewer, target, approach, ring ? TargetShape::kArc : TargetShape::kPlanar);
    b.index_of_difficulty = index_of_difficulty(b.distance, b.width);
    b.movement_time = report.params.a + report.params.b * b.index_of_difficulty;
    report.per_button.push_back(std::move(b));
  }
}

}  // namespace

UsabilityReport menu_usability_report(const core::MenuNode& menu, const layout::LayoutResult& layout,
                                      const ViewerConfig& viewer, const FittsParams& params) {
  check_params(params);
  check_viewer(viewer);
  if (layout.menu_id != menu.id || layout.button_ids != menu.buttons || layout.buttons.size() != menu.buttons.size()) {
    throw Error(ErrorCode::kInvalidArgument, "layout does not match menu " + menu.id);
  }

  UsabilityReport report;
  report.menu_id = menu.id;
  report.menu_type = menu.menu_type;
  report.viewer = viewer;
  report.params = params;
  if (menu.menu_type == core::MenuType::kPie) {
    report.model = "touchpad-angular";
    report.extrapolated = true;
    report.notes.push_back("touchpad menu scored with the angular model around the thumb pivot (extrapolated)");
    score_pie(layout, report);
  } else {
    report.model = "ray-casting-angular";
    score_ray_cast(layout, report);
  }
  if (viewer == default_viewer(layout)) {
    report.notes.push_back("start direction: default (menu centre)");
  }
  finish_aggregates(report);
  return report;
}

}  // namespace vrmenu::usability
