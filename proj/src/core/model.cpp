#include "vrmenu/core/model.hpp"

#include <algorithm>
#include <set>

#include "vrmenu/error.hpp"

namespace vrmenu {

const char* to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::kUnknownId:
    return "UnknownId";
  case ErrorCode::kBadSubMenuRef:
    return "BadSubMenuRef";
  case ErrorCode::kDepthViolation:
    return "DepthViolation";
  case ErrorCode::kCapacityExceeded:
    return "CapacityExceeded";
  case ErrorCode::kInvalidArgument:
    return "InvalidArgument";
  case ErrorCode::kInvalidMenu:
    return "InvalidMenu";
  case ErrorCode::kNonPositiveWidth:
    return "NonPositiveWidth";
  case ErrorCode::kBehindViewer:
    return "BehindViewer";
  case ErrorCode::kEmptyMenu:
    return "EmptyMenu";
  case ErrorCode::kSyntax:
    return "SyntaxError";
  case ErrorCode::kSchema:
    return "SchemaError";
  case ErrorCode::kConstraint:
    return "ConstraintError";
  case ErrorCode::kRevisionConflict:
    return "RevisionConflict";
  }
  return "Unknown";
}

}  // namespace vrmenu

namespace vrmenu::core {

namespace {

CapacityTable g_capacity_table{};

[[noreturn]] void throw_unknown(std::string_view kind, std::string_view id) {
  throw Error(ErrorCode::kUnknownId, "unknown " + std::string(kind) + " id '" + std::string(id) + "'");
}

}  // namespace

const char* to_string(ViolationKind kind) {
  switch (kind) {
  case ViolationKind::kCapacityExceeded:
    return "CapacityExceeded";
  case ViolationKind::kDoubleParent:
    return "DoubleParent";
  case ViolationKind::kCycle:
    return "Cycle";
  case ViolationKind::kDanglingSubMenu:
    return "DanglingSubMenu";
  case ViolationKind::kDanglingParent:
    return "DanglingParent";
  case ViolationKind::kButtonNotListed:
    return "ButtonNotListed";
  case ViolationKind::kDuplicateListing:
    return "DuplicateListing";
  case ViolationKind::kBadListing:
    return "BadListing";
  case ViolationKind::kRootReferenced:
    return "RootReferenced";
  case ViolationKind::kPositionNotAllowed:
    return "PositionNotAllowed";
  case ViolationKind::kDepthViolation:
    return "DepthViolation";
  case ViolationKind::kButtonTypeMismatch:
    return "ButtonTypeMismatch";
  case ViolationKind::kFormatVersion:
    return "FormatVersion";
  }
  return "Unknown";
}

const MenuNode* MenuDocument::find_menu(std::string_view id) const {
  auto it = menus.find(std::string(id));
  return it == menus.end() ? nullptr : &it->second;
}

const ButtonNode* MenuDocument::find_button(std::string_view id) const {
  auto it = buttons.find(std::string(id));
  return it == buttons.end() ? nullptr : &it->second;
}

MenuNode& MenuDocument::menu(std::string_view id) {
  auto it = menus.find(std::string(id));
  if (it == menus.end()) {
    throw_unknown("menu", id);
  }
  return it->second;
}

ButtonNode& MenuDocument::button(std::string_view id) {
  auto it = buttons.find(std::string(id));
  if (it == buttons.end()) {
    throw_unknown("button", id);
  }
  return it->second;
}

const MenuNode& MenuDocument::menu(std::string_view id) const {
  const MenuNode* node = find_menu(id);
  if (node == nullptr) {
    throw_unknown("menu", id);
  }
  return *node;
}

const ButtonNode& MenuDocument::button(std::string_view id) const {
  const ButtonNode* node = find_button(id);
  if (node == nullptr) {
    throw_unknown("button", id);
  }
  return *node;
}

MenuId MenuDocument::allocate_menu_id() {
  for (;;) {
    std::string id = "m" + std::to_string(id_counter++);
    if (!menus.contains(id) && !buttons.contains(id)) {
      return id;
    }
  }
}

ButtonId MenuDocument::allocate_button_id() {
  for (;;) {
    std::string id = "b" + std::to_string(id_counter++);
    if (!menus.contains(id) && !buttons.contains(id)) {
      return id;
    }
  }
}

const CapacityTable& capacity_table() { return g_capacity_table; }

void set_capacity_table(const CapacityTable& table) {
  if (table.list == 0 || table.matrix == 0 || table.pie == 0 || table.ring == 0) {
    throw Error(ErrorCode::kInvalidArgument, "menu capacities must be positive");
  }
  g_capacity_table = table;
}

MenuTypeTraits traits(MenuType type) {
  const CapacityTable& caps = capacity_table();
  switch (type) {
  case MenuType::kList:
    return {caps.list, std::nullopt, {PositionMode::kFixed, PositionMode::kHeadReferenced}, TriggerMethod::kRayCasting};
  case MenuType::kMatrix:
    return {caps.matrix, std::nullopt, {PositionMode::kFixed, PositionMode::kHeadReferenced}, TriggerMethod::kRayCasting};
  case MenuType::kPie:
    return {caps.pie, 1, {PositionMode::kHandReferenced}, TriggerMethod::kTouchpad};
  case MenuType::kRing:
    return {caps.ring, 1, {PositionMode::kHeadReferenced}, TriggerMethod::kRayCasting};
  }
  return {};
}

std::size_t max_button_num(MenuType type) { return traits(type).capacity; }

bool position_allowed(MenuType type, PositionMode mode) {
  const auto allowed = traits(type).allowed_positions;
  return std::find(allowed.begin(), allowed.end(), mode) != allowed.end();
}

PositionMode default_position(MenuType type) { return traits(type).allowed_positions.front(); }

bool allows_submenus(MenuType type) {
  const auto depth = traits(type).max_depth;
  return !depth.has_value() || *depth > 1;
}

const ButtonNode* parent_button_of(const MenuDocument& doc, std::string_view menu_id) {
  for (const auto& [id, button] : doc.buttons) {
    if (button.sub_menu_id && *button.sub_menu_id == menu_id) {
      return &button;
    }
  }
  return nullptr;
}

namespace {

int depth_rec(const MenuDocument& doc, const MenuNode& menu, std::set<std::string>& on_path) {
  if (!on_path.insert(menu.id).second) {
    return 0;
  }
  int deepest = 0;
  for (const auto& button_id : menu.buttons) {
    const ButtonNode* button = doc.find_button(button_id);
    if (button == nullptr || !button->sub_menu_id) {
      continue;
    }
    if (const MenuNode* child = doc.find_menu(*button->sub_menu_id)) {
      deepest = std::max(deepest, depth_rec(doc, *child, on_path));
    }
  }
  on_path.erase(menu.id);
  return deepest + 1;
}

void collect_subtree(const MenuDocument& doc, const MenuNode& menu, std::vector<MenuId>& out) {
  if (std::find(out.begin(), out.end(), menu.id) != out.end()) {
    return;
  }
  out.push_back(menu.id);
  for (const auto& button_id : menu.buttons) {
    const ButtonNode* button = doc.find_button(button_id);
    if (button == nullptr || !button->sub_menu_id) {
      continue;
    }
    if (const MenuNode* child = doc.find_menu(*button->sub_menu_id)) {
      collect_subtree(doc, *child, out);
    }
  }
}

}  // namespace

int depth_of(const MenuDocument& doc, std::string_view menu_id) {
  std::set<std::string> on_path;
  return depth_rec(doc, doc.menu(menu_id), on_path);
}

std::vector<MenuId> subtree_menus(const MenuDocument& doc, std::string_view menu_id) {
  std::vector<MenuId> out;
  collect_subtree(doc, doc.menu(menu_id), out);
  return out;
}

MenuDocument switch_active(const MenuDocument& doc, std::string_view menu_id) {
  MenuDocument next = doc;
  MenuNode& menu = next.menu(menu_id);
  menu.active = !menu.active;
  if (!menu.active) {
    for (const auto& id : subtree_menus(next, menu_id)) {
      next.menu(id).active = false;
    }
  }
  ++next.revision;
  return next;
}

bool effectively_active(const MenuDocument& doc, std::string_view menu_id) {
  std::set<std::string> seen;
  std::string current(menu_id);
  while (seen.insert(current).second) {
    const MenuNode& menu = doc.menu(current);
    if (!menu.active) {
      return false;
    }
    const ButtonNode* parent = parent_button_of(doc, current);
    if (parent == nullptr) {
      return true;
    }
    current = parent->parent_menu;
    if (doc.find_menu(current) == nullptr) {
      return true;
    }
  }
  return true;
}

std::string_view to_string(MenuType type) {
  switch (type) {
  case MenuType::kList:
    return "List";
  case MenuType::kMatrix:
    return "Matrix";
  case MenuType::kPie:
    return "Pie";
  case MenuType::kRing:
    return "Ring";
  }
  return "";
}

std::string_view to_string(PositionMode mode) {
  switch (mode) {
  case PositionMode::kFixed:
    return "Fixed";
  case PositionMode::kHandReferenced:
    return "HandReferenced";
  case PositionMode::kHeadReferenced:
    return "HeadReferenced";
  }
  return "";
}

std::string_view to_string(ButtonType type) {
  return type == ButtonType::kSubMenu ? "SubMenu" : "Function";
}

std::string_view to_string(TriggerMethod method) {
  return method == TriggerMethod::kTouchpad ? "Touchpad" : "RayCasting";
}

std::optional<MenuType> parse_menu_type(std::string_view text) {
  for (MenuType t : {MenuType::kList, MenuType::kMatrix, MenuType::kPie, MenuType::kRing}) {
    if (to_string(t) == text) {
      return t;
    }
  }
  return std::nullopt;
}

std::optional<PositionMode> parse_position_mode(std::string_view text) {
  for (PositionMode m : {PositionMode::kFixed, PositionMode::kHandReferenced, PositionMode::kHeadReferenced}) {
    if (to_string(m) == text) {
      return m;
    }
  }
  return std::nullopt;
}

std::optional<ButtonType> parse_button_type(std::string_view text) {
  for (ButtonType t : {ButtonType::kSubMenu, ButtonType::kFunction}) {
    if (to_string(t) == text) {
      return t;
    }
  }
  return std::nullopt;
}

}  // namespace vrmenu::core
