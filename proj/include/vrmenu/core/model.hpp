#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vrmenu::core {

enum class MenuType { kList, kMatrix, kPie, kRing };
enum class PositionMode { kFixed, kHandReferenced, kHeadReferenced };
enum class ButtonType { kSubMenu, kFunction };
enum class TriggerMethod { kRayCasting, kTouchpad };

inline constexpr int kFormatVersion = 1;

using MenuId = std::string;
using ButtonId = std::string;

struct MenuNode {
  MenuId id;
  std::string name;
  MenuType menu_type = MenuType::kList;
  // Declared top of a menu tree. A root is never bound as a submenu; a
  // parentless menu with is_root=false is a detached submenu waiting for a
  // SubMenu button to bind it.
  bool is_root = true;
  std::string title;
  PositionMode position_mode = PositionMode::kFixed;
  bool active = true;
  std::vector<ButtonId> buttons;

  friend bool operator==(const MenuNode&, const MenuNode&) = default;
};

struct ButtonNode {
  ButtonId id;
  MenuId parent_menu;
  std::string name;
  std::string text;
  std::optional<std::string> icon_ref;
  ButtonType button_type = ButtonType::kFunction;
  std::optional<MenuId> sub_menu_id;
  std::optional<std::string> function_id;

  friend bool operator==(const ButtonNode&, const ButtonNode&) = default;
};

struct MenuDocument {
  int format_version = kFormatVersion;
  std::uint64_t revision = 0;
  std::map<MenuId, MenuNode> menus;
  std::map<ButtonId, ButtonNode> buttons;
  // Next value handed out by allocate_*_id. Not persisted; a parsed document
  // resumes after the largest numeric suffix it contains.
  std::uint64_t id_counter = 1;

  const MenuNode* find_menu(std::string_view id) const;
  const ButtonNode* find_button(std::string_view id) const;
  MenuNode& menu(std::string_view id);
  ButtonNode& button(std::string_view id);
  const MenuNode& menu(std::string_view id) const;
  const ButtonNode& button(std::string_view id) const;

  MenuId allocate_menu_id();
  ButtonId allocate_button_id();

  // Structural equality: ignores id_counter.
  friend bool operator==(const MenuDocument& a, const MenuDocument& b) {
    return a.format_version == b.format_version && a.revision == b.revision && a.menus == b.menus &&
           a.buttons == b.buttons;
  }
};

// Per-type constraints of the built-in menus.
struct MenuTypeTraits {
  std::size_t capacity;
  std::optional<int> max_depth;  // nullopt = arbitrary
  std::vector<PositionMode> allowed_positions;
  TriggerMethod trigger;
};

// Capacities default to List 10, Matrix 9, Pie 4, Ring 12 and may be
// overridden process-wide (e.g. from a config file at CLI start-up).
struct CapacityTable {
  std::size_t list = 10;
  std::size_t matrix = 9;
  std::size_t pie = 4;
  std::size_t ring = 12;
};

const CapacityTable& capacity_table();
void set_capacity_table(const CapacityTable& table);

MenuTypeTraits traits(MenuType type);
std::size_t max_button_num(MenuType type);
bool position_allowed(MenuType type, PositionMode mode);
PositionMode default_position(MenuType type);
bool allows_submenus(MenuType type);

// Button whose sub_menu_id names `menu_id`, if any.
const ButtonNode* parent_button_of(const MenuDocument& doc, std::string_view menu_id);

// Number of menu levels in the subtree rooted at menu_id (childless menu = 1).
// Throws Error{kUnknownId}.
int depth_of(const MenuDocument& doc, std::string_view menu_id);

// Menu ids in the subtree rooted at menu_id, root first, depth-first in button order.
std::vector<MenuId> subtree_menus(const MenuDocument& doc, std::string_view menu_id);

// Flips the menu's active flag. Deactivation cascades to the whole subtree;
// activation touches only this menu. Throws Error{kUnknownId}.
MenuDocument switch_active(const MenuDocument& doc, std::string_view menu_id);

// A menu is effectively active when it and every ancestor menu is active.
bool effectively_active(const MenuDocument& doc, std::string_view menu_id);

std::string_view to_string(MenuType type);
std::string_view to_string(PositionMode mode);
std::string_view to_string(ButtonType type);
std::string_view to_string(TriggerMethod method);
std::optional<MenuType> parse_menu_type(std::string_view text);
std::optional<PositionMode> parse_position_mode(std::string_view text);
std::optional<ButtonType> parse_button_type(std::string_view text);

}  // namespace vrmenu::core
