#include "vrmenu/layout/layout.hpp"

#include <algorithm>
#include <cmath>

#include "vrmenu/core/validate.hpp"
#include "vrmenu/error.hpp"

namespace vrmenu::layout {

namespace {

Vec3 rotate(const Transform& t, const Vec3& v) {
  // R = R_y(yaw) * R_x(pitch)
  const double cp = std::cos(t.pitch);
  const double sp = std::sin(t.pitch);
  const Vec3 p{v.x, v.y * cp - v.z * sp, v.y * sp + v.z * cp};
  const double cy = std::cos(t.yaw);
  const double sy = std::sin(t.yaw);
  return {p.x * cy + p.z * sy, p.y, -p.x * sy + p.z * cy};
}

// Keeps -0.0 out of serialized output.
double clean(double v) { return v == 0.0 ? 0.0 : v; }

Vec3 clean(const Vec3& v) { return {clean(v.x), clean(v.y), clean(v.z)}; }

void layout_list(const core::MenuNode& menu, const StyleParams& style, LayoutResult& out) {
  const double pitch = style.button_height + style.gap;
  const double n = static_cast<double>(menu.buttons.size());
  const double y_top = style.title_height + n * pitch / 2.0;
  out.title = {{0.0, y_top - style.title_height / 2.0, -style.plane_distance},
               0.0,
               0.0,
               {style.button_width, style.title_height}};
  for (std::size_t i = 0; i < menu.buttons.size(); ++i) {
    const double y = y_top - style.title_height - (static_cast<double>(i) + 0.5) * pitch;
    out.buttons.push_back({clean(Vec3{0.0, y, -style.plane_distance}),
                           0.0,
                           0.0,
                           {style.button_width, style.button_height}});
  }
}

void layout_matrix(const core::MenuNode& menu, const StyleParams& style, LayoutResult& out) {
  const double step = style.cell_size + style.gap;
  out.title = {{0.0, 1.5 * step + style.title_height / 2.0, -style.plane_distance},
               0.0,
               0.0,
               {3.0 * style.cell_size + 2.0 * style.gap, style.title_height}};
  for (std::size_t k = 0; k < menu.buttons.size(); ++k) {
    const double row = static_cast<double>(k / 3);
    const double col = static_cast<double>(k % 3);
    out.buttons.push_back({clean(Vec3{(col - 1.0) * step, (1.0 - row) * step, -style.plane_distance}),
                           0.0,
                           0.0,
                           {style.cell_size, style.cell_size}});
  }
}

void layout_pie(const core::MenuNode& menu, const StyleParams& style, LayoutResult& out) {
  const double r = style.pie_radius;
  out.title = {{0.0, 0.0, 0.0}, 0.0, 0.0, {r / 2.0, r / 2.0}};
  const std::size_t n = menu.buttons.size();
  if (n == 0) {
    return;
  }
  const double step = kTwoPi / static_cast<double>(n);
  // Square anchor box no wider than half the chord between neighbouring
  // anchors, so neighbouring boxes never overlap.
  const double side = r * std::sin(std::min(step / 2.0, kPi / 2.0));
  for (std::size_t k = 0; k < n; ++k) {
    const double start = static_cast<double>(k) * step;
    const double end = k + 1 == n ? kTwoPi : static_cast<double>(k + 1) * step;
    out.sectors.push_back({start, end});
    const double bisector = (static_cast<double>(k) + 0.5) * step;
    out.buttons.push_back({clean(Vec3{r * std::cos(bisector), r * std::sin(bisector), 0.0}), 0.0, 0.0, {side, side}});
  }
}

void layout_ring(const core::MenuNode& menu, const StyleParams& style, LayoutResult& out) {
  const double r = style.ring_radius;
  out.title = {{0.0, style.button_height / 2.0 + style.gap + style.title_height / 2.0, -r},
               0.0,
               0.0,
               {style.button_width, style.title_height}};
  const std::size_t n = menu.buttons.size();
  for (std::size_t k = 0; k < n; ++k) {
    const double azimuth = static_cast<double>(k) * kTwoPi / static_cast<double>(n);
    out.buttons.push_back({clean(Vec3{r * std::sin(azimuth), 0.0, -r * std::cos(azimuth)}),
                           clean(wrap_angle(-azimuth)),
                           0.0,
                           {style.button_width, style.button_height}});
  }
}

}  // namespace

Vec3 right_axis(const Transform& t) { return rotate(t, {1.0, 0.0, 0.0}); }
Vec3 up_axis(const Transform& t) { return rotate(t, {0.0, 1.0, 0.0}); }
Vec3 face_normal(const Transform& t) { return rotate(t, {0.0, 0.0, 1.0}); }

Aabb bounds(const Transform& t) {
  const Vec3 half_right = right_axis(t) * (t.size.width / 2.0);
  const Vec3 half_up = up_axis(t) * (t.size.height / 2.0);
  const Vec3 extent{std::abs(half_right.x) + std::abs(half_up.x), std::abs(half_right.y) + std::abs(half_up.y),
                    std::abs(half_right.z) + std::abs(half_up.z)};
  return {t.position - extent, t.position + extent};
}

bool overlaps(const Aabb& a, const Aabb& b) {
  return a.min.x < b.max.x && b.min.x < a.max.x && a.min.y < b.max.y && b.min.y < a.max.y && a.min.z <= b.max.z &&
         b.min.z <= a.max.z;
}

Frame frame_for(core::PositionMode mode) {
  switch (mode) {
  case core::PositionMode::kFixed:
    return Frame::kWorld;
  case core::PositionMode::kHeadReferenced:
    return Frame::kHead;
  case core::PositionMode::kHandReferenced:
    return Frame::kHand;
  }
  return Frame::kWorld;
}

std::string_view to_string(Frame frame) {
  switch (frame) {
  case Frame::kWorld:
    return "World";
  case Frame::kHead:
    return "Head";
  case Frame::kHand:
    return "Hand";
  }
  return "";
}

void check_style(const StyleParams& style) {
  const std::pair<const char*, double> fields[] = {
      {"buttonWidth", style.button_width},   {"buttonHeight", style.button_height},
      {"cellSize", style.cell_size},         {"gap", style.gap},
      {"titleHeight", style.title_height},   {"planeDistance", style.plane_distance},
      {"ringRadius", style.ring_radius},     {"pieRadius", style.pie_radius},
  };
  for (const auto& [name, value] : fields) {
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw Error(ErrorCode::kInvalidArgument, std::string("style field ") + name + " must be positive");
    }
  }
}

LayoutResult layout(const core::MenuNode& menu, const StyleParams& style) {
  check_style(style);
  const std::size_t capacity = core::max_button_num(menu.menu_type);
  if (menu.buttons.size() > capacity) {
    throw Error(ErrorCode::kInvalidMenu,
                "menu " + menu.id + " holds " + std::to_string(menu.buttons.size()) + " buttons, capacity " +
                    std::to_string(capacity),
                {{core::ViolationKind::kCapacityExceeded, menu.id,
                  std::to_string(menu.buttons.size()) + " > " + std::to_string(capacity)}});
  }
  if (!core::position_allowed(menu.menu_type, menu.position_mode)) {
    throw Error(ErrorCode::kInvalidMenu, "menu " + menu.id + " has a position mode its type does not allow",
                {{core::ViolationKind::kPositionNotAllowed, menu.id, std::string(core::to_string(menu.position_mode))}});
  }

  LayoutResult out;
  out.menu_id = menu.id;
  out.menu_type = menu.menu_type;
  out.frame = frame_for(menu.position_mode);
  out.button_ids = menu.buttons;
  switch (menu.menu_type) {
  case core::MenuType::kList:
    layout_list(menu, style, out);
    break;
  case core::MenuType::kMatrix:
    layout_matrix(menu, style, out);
    break;
  case core::MenuType::kPie:
    layout_pie(menu, style, out);
    break;
  case core::MenuType::kRing:
    layout_ring(menu, style, out);
    break;
  }
  out.title.position = clean(out.title.position);
  return out;
}

LayoutResult relayout_after_edit(const core::MenuNode& menu, const StyleParams& style) { return layout(menu, style); }

}  // namespace vrmenu::layout
