#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vrmenu/core/model.hpp"

namespace vrmenu::editor {

struct ButtonSpec {
  std::string name;
  std::string text;
  std::optional<std::string> icon_ref;
  core::ButtonType button_type = core::ButtonType::kFunction;
  std::optional<core::MenuId> sub_menu_ref;
  std::optional<std::string> function_id;

  friend bool operator==(const ButtonSpec&, const ButtonSpec&) = default;
};

struct CreateMenuRequest {
  std::string menu_name;
  core::MenuType menu_type = core::MenuType::kList;
  bool is_root_menu = true;
  std::string menu_title;
  // Defaults to the first position mode the menu type allows.
  std::optional<core::PositionMode> position_mode;
  std::vector<ButtonSpec> button_specs;

  friend bool operator==(const CreateMenuRequest&, const CreateMenuRequest&) = default;
};

struct EditOutcome {
  core::MenuDocument document;
  std::vector<std::string> created_ids;
  std::vector<std::string> warnings;
  // Menus and buttons whose stored state changed (including created and deleted ones).
  std::vector<std::string> changed_ids;
};

// Creator loop. Instantiates the menu with the first max_button_num(type)
// specs; dropped specs produce a warning carrying the capacity alert text.
// The menu id is allocated before its button ids.
EditOutcome create_menu(const core::MenuDocument& doc, const CreateMenuRequest& req);

enum class SelectionKind { kNone, kMenu, kButton };

std::string_view to_string(SelectionKind kind);
SelectionKind resolve_selection(const core::MenuDocument& doc, std::string_view id);

struct ButtonTypeChange {
  core::ButtonType new_type = core::ButtonType::kFunction;
  std::optional<core::MenuId> sub_menu_ref;   // required for SubMenu
  std::optional<std::string> function_id;     // required for Function
};

// Function -> SubMenu binds the target; SubMenu -> Function releases the old
// submenu, which becomes a root menu.
EditOutcome set_button_type(const core::MenuDocument& doc, std::string_view button_id, const ButtonTypeChange& change);
EditOutcome set_button_text(const core::MenuDocument& doc, std::string_view button_id, std::string text);
EditOutcome set_button_icon(const core::MenuDocument& doc, std::string_view button_id,
                            std::optional<std::string> icon_ref);
// Deletes the button and, if it opens a submenu, that submenu's whole subtree.
EditOutcome remove_button(const core::MenuDocument& doc, std::string_view button_id);
EditOutcome set_menu_title(const core::MenuDocument& doc, std::string_view menu_id, std::string title);
// Appends a button; throws Error{kCapacityExceeded} with the capacity alert
// text when the menu is full.
EditOutcome add_button(const core::MenuDocument& doc, std::string_view menu_id, const ButtonSpec& spec);
EditOutcome toggle_menu_active(const core::MenuDocument& doc, std::string_view menu_id);

}  // namespace vrmenu::editor
