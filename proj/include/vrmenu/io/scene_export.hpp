#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vrmenu/core/model.hpp"
#include "vrmenu/io/json_util.hpp"
#include "vrmenu/layout/layout.hpp"

namespace vrmenu::io {

enum class SceneNodeKind { kTitle, kButton };

struct SceneNode {
  std::string id;  // menu id for titles, button id for buttons
  SceneNodeKind kind = SceneNodeKind::kButton;
  core::MenuId menu_id;
  layout::Transform transform;
  std::string text;
  std::optional<std::string> icon_ref;
  bool active = true;  // false when the menu or any ancestor menu is hidden
};

// Engine-neutral hand-off of a laid-out document: one frame tag per menu and
// one node per menu title and per button, transforms straight from layout().
struct SceneExport {
  std::map<core::MenuId, layout::Frame> frames;
  std::vector<SceneNode> nodes;
};

SceneExport export_scene(const core::MenuDocument& doc, const layout::StyleParams& style = {});
Json to_json(const SceneExport& scene);

}  // namespace vrmenu::io
