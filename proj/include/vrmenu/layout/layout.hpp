#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vrmenu/core/model.hpp"
#include "vrmenu/math.hpp"

namespace vrmenu::layout {

struct Size2 {
  double width = 0.0;
  double height = 0.0;
  friend bool operator==(const Size2&, const Size2&) = default;
};

// Placement of one element in its menu's reference frame. With yaw = pitch = 0
// the element's face lies in a plane parallel to x/y with its normal along +z,
// i.e. facing a viewer at the frame origin when the element sits at negative z.
// Yaw rotates about +y, pitch about the element's local x axis.
struct Transform {
  Vec3 position;
  double yaw = 0.0;
  double pitch = 0.0;
  Size2 size;
  friend bool operator==(const Transform&, const Transform&) = default;
};

Vec3 right_axis(const Transform& t);
Vec3 up_axis(const Transform& t);
Vec3 face_normal(const Transform& t);

struct Aabb {
  Vec3 min;
  Vec3 max;
};

// Axis-aligned bounds of the (zero-thickness) element rectangle.
Aabb bounds(const Transform& t);
bool overlaps(const Aabb& a, const Aabb& b);

enum class Frame { kWorld, kHead, kHand };

Frame frame_for(core::PositionMode mode);
std::string_view to_string(Frame frame);

struct StyleParams {
  double button_width = 0.6;
  double button_height = 0.15;
  double cell_size = 0.3;  // Matrix cells are square
  double gap = 0.05;
  double title_height = 0.2;
  double plane_distance = 2.0;
  double ring_radius = 2.0;
  double pie_radius = 0.02;
};

// Throws Error{kInvalidArgument} naming the first non-positive field.
void check_style(const StyleParams& style);

// Angular extent [start, end) in radians, measured counter-clockwise from +x
// in the touchpad plane.
struct AngularSector {
  double start = 0.0;
  double end = 0.0;
  friend bool operator==(const AngularSector&, const AngularSector&) = default;
};

struct LayoutResult {
  core::MenuId menu_id;
  core::MenuType menu_type = core::MenuType::kList;
  Frame frame = Frame::kWorld;
  Transform title;
  std::vector<core::ButtonId> button_ids;
  std::vector<Transform> buttons;   // same order as the menu's buttons
  std::vector<AngularSector> sectors;  // Pie only

  friend bool operator==(const LayoutResult&, const LayoutResult&) = default;
};

// Computes the placement of the title and every button of `menu`.
//
//   List   - vertical stack facing the viewer at z = -plane_distance; the button
//            block is centred on the frame's z axis and the title sits on top.
//   Matrix - 3x3 row-major grid centred on the z axis; slot k is row k/3,
//            column k%3 regardless of how many buttons are present.
//   Pie    - n equal sectors in the touchpad (x/y) plane of the hand frame;
//            each button is anchored at its sector bisector at pie_radius.
//   Ring   - n buttons on a horizontal circle of ring_radius around the head,
//            button k at azimuth k*2pi/n (azimuth 0 straight ahead, -z),
//            each facing the centre.
//
// Throws Error{kInvalidMenu} when the menu breaks its own type constraints.
LayoutResult layout(const core::MenuNode& menu, const StyleParams& style = {});

// Layout after an add/remove. Layout carries no state, so this is layout() on
// the edited menu; kept as a separate entry point for the Modifier workflow.
LayoutResult relayout_after_edit(const core::MenuNode& menu, const StyleParams& style = {});

}  // namespace vrmenu::layout
