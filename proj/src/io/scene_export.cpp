#include "vrmenu/io/scene_export.hpp"

#include "vrmenu/io/report_format.hpp"

namespace vrmenu::io {

SceneExport export_scene(const core::MenuDocument& doc, const layout::StyleParams& style) {
  SceneExport scene;
  for (const auto& [menu_id, menu] : doc.menus) {
    const layout::LayoutResult placed = layout::layout(menu, style);
    const bool active = core::effectively_active(doc, menu_id);
    scene.frames.emplace(menu_id, placed.frame);
    scene.nodes.push_back({menu_id, SceneNodeKind::kTitle, menu_id, placed.title, menu.title, std::nullopt, active});
    for (std::size_t i = 0; i < placed.buttons.size(); ++i) {
      const core::ButtonNode& button = doc.button(placed.button_ids[i]);
      scene.nodes.push_back(
          {button.id, SceneNodeKind::kButton, menu_id, placed.buttons[i], button.text, button.icon_ref, active});
    }
  }
  return scene;
}

Json to_json(const SceneExport& scene) {
  Json frames = Json::object();
  for (const auto& [menu_id, frame] : scene.frames) {
    frames[menu_id] = std::string(layout::to_string(frame));
  }
  Json nodes = Json::array();
  for (const auto& node : scene.nodes) {
    nodes.push_back(Json{{"id", node.id},
                         {"kind", node.kind == SceneNodeKind::kTitle ? "title" : "button"},
                         {"menuId", node.menu_id},
                         {"transform", to_json(node.transform)},
                         {"text", node.text},
                         {"iconRef", node.icon_ref ? Json(*node.icon_ref) : Json(nullptr)},
                         {"active", node.active}});
  }
  return Json{{"frames", std::move(frames)}, {"nodes", std::move(nodes)}};
}

}  // namespace vrmenu::io
