#pragma once

#include <string>
#include <string_view>

#include "vrmenu/core/model.hpp"
#include "vrmenu/editor/editor.hpp"
#include "vrmenu/layout/layout.hpp"

// Text formats. Every format is UTF-8 JSON; serialization is canonical:
// object keys sorted, two-space indentation, one trailing newline, menus and
// buttons ordered by id, absent optionals written as null.
//
// Document file:
//   { "formatVersion": 1, "revision": N,
//     "menus":   [ { "id", "name", "menuType", "isRoot", "title",
//                    "positionMode", "active", "buttons": [ids] } ],
//     "buttons": [ { "id", "parentMenu", "name", "text", "iconRef",
//                    "buttonType", "subMenuId", "functionId" } ] }
//
// Parse errors are Error{kSyntax} ("line L, column C: ..."),
// Error{kSchema} ("<field path>: ...") or Error{kConstraint} carrying the
// violations found by core::validate.
namespace vrmenu::io {

core::MenuDocument parse_document(std::string_view text);
std::string serialize_document(const core::MenuDocument& doc);

// { "menuName", "menuType", "isRootMenu", "menuTitle", "positionMode"?, "buttonSpecs": [ButtonSpec] }
editor::CreateMenuRequest parse_create_request(std::string_view text);
std::string serialize_create_request(const editor::CreateMenuRequest& req);

// { "name", "text", "iconRef"?, "buttonType", "subMenuRef"?, "functionId"? }
editor::ButtonSpec parse_button_spec(std::string_view text);

// Partial override of the default style; unknown keys are rejected.
layout::StyleParams parse_style(std::string_view text);

}  // namespace vrmenu::io
