#include "vrmenu/io/document_format.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "vrmenu/core/validate.hpp"
#include "vrmenu/error.hpp"
#include "vrmenu/io/json_util.hpp"

namespace vrmenu::io {

namespace {

Json optional_json(const std::optional<std::string>& v) { return v ? Json(*v) : Json(nullptr); }

core::MenuType read_menu_type(const ObjectReader& r, const char* key) {
  const std::string text = r.string(key);
  auto type = core::parse_menu_type(text);
  if (!type) {
    r.fail(key, "unknown menu type '" + text + "'");
  }
  return *type;
}

core::PositionMode read_position_mode(const ObjectReader& r, const char* key) {
  const std::string text = r.string(key);
  auto mode = core::parse_position_mode(text);
  if (!mode) {
    r.fail(key, "unknown position mode '" + text + "'");
  }
  return *mode;
}

core::ButtonType read_button_type(const ObjectReader& r, const char* key) {
  const std::string text = r.string(key);
  auto type = core::parse_button_type(text);
  if (!type) {
    r.fail(key, "unknown button type '" + text + "'");
  }
  return *type;
}

std::string read_id(const ObjectReader& r, const char* key) {
  std::string id = r.string(key);
  if (id.empty()) {
    r.fail(key, "id must not be empty");
  }
  return id;
}

// Numeric suffix of generated ids ("m12" -> 12).
std::uint64_t id_suffix(const std::string& id) {
  if (id.size() < 2 || (id[0] != 'm' && id[0] != 'b') || id.size() > 19) {
    return 0;
  }
  std::uint64_t value = 0;
  for (std::size_t i = 1; i < id.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) {
      return 0;
    }
    value = value * 10 + static_cast<std::uint64_t>(id[i] - '0');
  }
  return value;
}

editor::ButtonSpec read_button_spec(const Json& j, const std::string& path) {
  ObjectReader r(j, path);
  r.allow_only({"name", "text", "iconRef", "buttonType", "subMenuRef", "functionId"});
  editor::ButtonSpec spec;
  spec.name = r.string("name");
  spec.text = r.has("text") ? r.string("text") : std::string{};
  spec.icon_ref = r.optional_string("iconRef");
  spec.button_type = read_button_type(r, "buttonType");
  spec.sub_menu_ref = r.optional_string("subMenuRef");
  spec.function_id = r.optional_string("functionId");
  return spec;
}

Json button_spec_json(const editor::ButtonSpec& spec) {
  return Json{{"name", spec.name},
              {"text", spec.text},
              {"iconRef", optional_json(spec.icon_ref)},
              {"buttonType", std::string(core::to_string(spec.button_type))},
              {"subMenuRef", optional_json(spec.sub_menu_ref)},
              {"functionId", optional_json(spec.function_id)}};
}

}  // namespace

core::MenuDocument parse_document(std::string_view text) {
  const Json j = parse_json(text);
  ObjectReader top(j, "");
  top.allow_only({"formatVersion", "revision", "menus", "buttons"});

  core::MenuDocument doc;
  const std::int64_t version = top.integer("formatVersion");
  if (version != core::kFormatVersion) {
    top.fail("formatVersion", "unsupported version " + std::to_string(version));
  }
  doc.format_version = static_cast<int>(version);
  doc.revision = top.unsigned_integer("revision");

  std::set<std::string> seen_ids;
  std::uint64_t max_suffix = 0;
  auto claim_id = [&](const ObjectReader& r, const std::string& id) {
    if (!seen_ids.insert(id).second) {
      r.fail("id", "duplicate id '" + id + "'");
    }
    max_suffix = std::max(max_suffix, id_suffix(id));
  };

  const Json& menus = top.array("menus");
  for (std::size_t i = 0; i < menus.size(); ++i) {
    ObjectReader r(menus[i], top.element("menus", i));
    r.allow_only({"id", "name", "menuType", "isRoot", "title", "positionMode", "active", "buttons"});
    core::MenuNode menu;
    menu.id = read_id(r, "id");
    claim_id(r, menu.id);
    menu.name = r.string("name");
    menu.menu_type = read_menu_type(r, "menuType");
    menu.is_root = r.boolean("isRoot");
    menu.title = r.string("title");
    menu.position_mode = read_position_mode(r, "positionMode");
    menu.active = r.boolean("active");
    const Json& listed = r.array("buttons");
    for (std::size_t k = 0; k < listed.size(); ++k) {
      if (!listed[k].is_string()) {
        throw Error(ErrorCode::kSchema, r.element("buttons", k) + ": expected a button id string");
      }
      menu.buttons.push_back(listed[k].get<std::string>());
    }
    doc.menus.emplace(menu.id, std::move(menu));
  }

  const Json& buttons = top.array("buttons");
  for (std::size_t i = 0; i < buttons.size(); ++i) {
    ObjectReader r(buttons[i], top.element("buttons", i));
    r.allow_only({"id", "parentMenu", "name", "text", "iconRef", "buttonType", "subMenuId", "functionId"});
    core::ButtonNode button;
    button.id = read_id(r, "id");
    claim_id(r, button.id);
    button.parent_menu = r.string("parentMenu");
    button.name = r.string("name");
    button.text = r.string("text");
    button.icon_ref = r.optional_string("iconRef");
    button.button_type = read_button_type(r, "buttonType");
    button.sub_menu_id = r.optional_string("subMenuId");
    button.function_id = r.optional_string("functionId");
    doc.buttons.emplace(button.id, std::move(button));
  }
  doc.id_counter = max_suffix + 1;

  auto violations = core::validate(doc);
  if (!violations.empty()) {
    const auto& first = violations.front();
    throw Error(ErrorCode::kConstraint,
                std::string(core::to_string(first.kind)) + " on '" + first.node_id + "': " + first.detail,
                std::move(violations));
  }
  return doc;
}

std::string serialize_document(const core::MenuDocument& doc) {
  Json menus = Json::array();
  for (const auto& [id, menu] : doc.menus) {
    menus.push_back(Json{{"id", menu.id},
                         {"name", menu.name},
                         {"menuType", std::string(core::to_string(menu.menu_type))},
                         {"isRoot", menu.is_root},
                         {"title", menu.title},
                         {"positionMode", std::string(core::to_string(menu.position_mode))},
                         {"active", menu.active},
                         {"buttons", menu.buttons}});
  }
  Json buttons = Json::array();
  for (const auto& [id, button] : doc.buttons) {
    buttons.push_back(Json{{"id", button.id},
                           {"parentMenu", button.parent_menu},
                           {"name", button.name},
                           {"text", button.text},
                           {"iconRef", optional_json(button.icon_ref)},
                           {"buttonType", std::string(core::to_string(button.button_type))},
                           {"subMenuId", optional_json(button.sub_menu_id)},
                           {"functionId", optional_json(button.function_id)}});
  }
  return dump(Json{{"formatVersion", doc.format_version},
                   {"revision", doc.revision},
                   {"menus", std::move(menus)},
                   {"buttons", std::move(buttons)}});
}

editor::CreateMenuRequest parse_create_request(std::string_view text) {
  const Json j = parse_json(text);
  ObjectReader r(j, "");
  r.allow_only({"menuName", "menuType", "isRootMenu", "menuTitle", "positionMode", "buttonSpecs"});
  editor::CreateMenuRequest req;
  req.menu_name = r.string("menuName");
  req.menu_type = read_menu_type(r, "menuType");
  req.is_root_menu = r.optional_boolean("isRootMenu").value_or(true);
  req.menu_title = r.has("menuTitle") ? r.string("menuTitle") : std::string{};
  if (r.has("positionMode")) {
    req.position_mode = read_position_mode(r, "positionMode");
  }
  if (const Json* specs = r.optional_array("buttonSpecs")) {
    for (std::size_t i = 0; i < specs->size(); ++i) {
      req.button_specs.push_back(read_button_spec((*specs)[i], r.element("buttonSpecs", i)));
    }
  }
  return req;
}

std::string serialize_create_request(const editor::CreateMenuRequest& req) {
  Json specs = Json::array();
  for (const auto& spec : req.button_specs) {
    specs.push_back(button_spec_json(spec));
  }
  return dump(Json{{"menuName", req.menu_name},
                   {"menuType", std::string(core::to_string(req.menu_type))},
                   {"isRootMenu", req.is_root_menu},
                   {"menuTitle", req.menu_title},
                   {"positionMode", req.position_mode ? Json(std::string(core::to_string(*req.position_mode)))
                                                      : Json(nullptr)},
                   {"buttonSpecs", std::move(specs)}});
}

editor::ButtonSpec parse_button_spec(std::string_view text) { return read_button_spec(parse_json(text), ""); }

layout::StyleParams parse_style(std::string_view text) {
  const Json j = parse_json(text);
  ObjectReader r(j, "");
  r.allow_only({"buttonWidth", "buttonHeight", "cellSize", "gap", "titleHeight", "planeDistance", "ringRadius",
                "pieRadius"});
  layout::StyleParams style;
  style.button_width = r.optional_number("buttonWidth").value_or(style.button_width);
  style.button_height = r.optional_number("buttonHeight").value_or(style.button_height);
  style.cell_size = r.optional_number("cellSize").value_or(style.cell_size);
  style.gap = r.optional_number("gap").value_or(style.gap);
  style.title_height = r.optional_number("titleHeight").value_or(style.title_height);
  style.plane_distance = r.optional_number("planeDistance").value_or(style.plane_distance);
  style.ring_radius = r.optional_number("ringRadius").value_or(style.ring_radius);
  style.pie_radius = r.optional_number("pieRadius").value_or(style.pie_radius);
  layout::check_style(style);
  return style;
}

}  // namespace vrmenu::io
