#include "vrmenu/editor/editor.hpp"

#include <algorithm>

#include "vrmenu/core/validate.hpp"
#include "vrmenu/error.hpp"

namespace vrmenu::editor {

namespace {

using core::ButtonNode;
using core::ButtonType;
using core::MenuDocument;
using core::MenuNode;

// True when `candidate` is `menu_id` or one of its ancestors. Binding such a
// candidate under `menu_id` would close a cycle.
bool is_self_or_ancestor(const MenuDocument& doc, const std::string& candidate, const std::string& menu_id) {
  std::string current = menu_id;
  for (std::size_t guard = 0; guard <= doc.menus.size(); ++guard) {
    if (current == candidate) {
      return true;
    }
    const ButtonNode* parent = core::parent_button_of(doc, current);
    if (parent == nullptr) {
      return false;
    }
    current = parent->parent_menu;
  }
  return true;
}

void check_submenu_target(const MenuDocument& doc, const std::string& target, const std::string* owner_menu) {
  const MenuNode* menu = doc.find_menu(target);
  if (menu == nullptr) {
    throw Error(ErrorCode::kBadSubMenuRef, "submenu reference '" + target + "' does not name a menu");
  }
  if (menu->is_root) {
    throw Error(ErrorCode::kBadSubMenuRef, "menu '" + target + "' is a root menu and cannot be a submenu");
  }
  if (const ButtonNode* parent = core::parent_button_of(doc, target)) {
    throw Error(ErrorCode::kBadSubMenuRef, "menu '" + target + "' is already the submenu of button " + parent->id);
  }
  if (owner_menu != nullptr && is_self_or_ancestor(doc, target, *owner_menu)) {
    throw Error(ErrorCode::kBadSubMenuRef, "binding menu '" + target + "' under " + *owner_menu + " forms a cycle");
  }
}

void check_spec_shape(const ButtonSpec& spec, core::MenuType owner_type) {
  if (spec.button_type == ButtonType::kSubMenu) {
    if (!core::allows_submenus(owner_type)) {
      throw Error(ErrorCode::kDepthViolation,
                  std::string(core::to_string(owner_type)) + " menus allow only Function buttons");
    }
    if (!spec.sub_menu_ref || spec.sub_menu_ref->empty()) {
      throw Error(ErrorCode::kBadSubMenuRef, "SubMenu button '" + spec.name + "' has no submenu reference");
    }
  } else if (!spec.function_id || spec.function_id->empty()) {
    throw Error(ErrorCode::kInvalidArgument, "Function button '" + spec.name + "' has no function id");
  }
}

ButtonNode make_button(const ButtonSpec& spec, std::string id, std::string parent) {
  ButtonNode button;
  button.id = std::move(id);
  button.parent_menu = std::move(parent);
  button.name = spec.name;
  button.text = spec.text;
  button.icon_ref = spec.icon_ref;
  button.button_type = spec.button_type;
  if (spec.button_type == ButtonType::kSubMenu) {
    button.sub_menu_id = spec.sub_menu_ref;
  } else {
    button.function_id = spec.function_id;
  }
  return button;
}

// Final gate: an edit that would break an invariant is a bug, not user error,
// but it must still never reach a caller.
EditOutcome commit(const MenuDocument& before, MenuDocument after, std::vector<std::string> created,
                   std::vector<std::string> warnings, std::vector<std::string> changed) {
  after.revision = before.revision + 1;
  auto violations = core::validate(after);
  if (!violations.empty()) {
    throw Error(ErrorCode::kConstraint, "edit would leave the document invalid: " +
                                            std::string(core::to_string(violations.front().kind)) + " on " +
                                            violations.front().node_id,
                std::move(violations));
  }
  return {std::move(after), std::move(created), std::move(warnings), std::move(changed)};
}

}  // namespace

EditOutcome create_menu(const MenuDocument& doc, const CreateMenuRequest& req) {
  const std::size_t capacity = core::max_button_num(req.menu_type);
  const core::PositionMode position = req.position_mode.value_or(core::default_position(req.menu_type));
  if (!core::position_allowed(req.menu_type, position)) {
    throw Error(ErrorCode::kInvalidArgument, std::string(core::to_string(position)) + " is not allowed for " +
                                                 std::string(core::to_string(req.menu_type)) + " menus");
  }

  std::vector<std::string> warnings;
  const std::size_t kept = std::min(req.button_specs.size(), capacity);
  if (kept < req.button_specs.size()) {
    warnings.push_back(std::string(kCapacityAlert) + ": " + std::to_string(req.button_specs.size()) + " requested, " +
                       std::to_string(capacity) + " kept for " + std::string(core::to_string(req.menu_type)) +
                       " menu");
  }

  MenuDocument next = doc;
  MenuNode menu;
  menu.id = next.allocate_menu_id();
  menu.name = req.menu_name;
  menu.menu_type = req.menu_type;
  menu.is_root = req.is_root_menu;
  menu.title = req.menu_title;
  menu.position_mode = position;
  menu.active = true;

  std::vector<std::string> created{menu.id};
  std::vector<std::string> changed{menu.id};
  for (std::size_t i = 0; i < kept; ++i) {
    const ButtonSpec& spec = req.button_specs[i];
    check_spec_shape(spec, req.menu_type);
    if (spec.button_type == ButtonType::kSubMenu) {
      // The new menu is not in `next` yet, so it cannot be anyone's ancestor.
      check_submenu_target(next, *spec.sub_menu_ref, nullptr);
    }
    ButtonNode button = make_button(spec, next.allocate_button_id(), menu.id);
    if (button.sub_menu_id) {
      changed.push_back(*button.sub_menu_id);
    }
    menu.buttons.push_back(button.id);
    created.push_back(button.id);
    changed.push_back(button.id);
    next.buttons.emplace(button.id, std::move(button));
  }
  next.menus.emplace(menu.id, std::move(menu));
  return commit(doc, std::move(next), std::move(created), std::move(warnings), std::move(changed));
}

std::string_view to_string(SelectionKind kind) {
  switch (kind) {
  case SelectionKind::kMenu:
    return "menu";
  case SelectionKind::kButton:
    return "button";
  case SelectionKind::kNone:
    return "none";
  }
  return "none";
}

SelectionKind resolve_selection(const MenuDocument& doc, std::string_view id) {
  if (doc.find_menu(id) != nullptr) {
    return SelectionKind::kMenu;
  }
  if (doc.find_button(id) != nullptr) {
    return SelectionKind::kButton;
  }
  return SelectionKind::kNone;
}

EditOutcome set_button_type(const MenuDocument& doc, std::string_view button_id, const ButtonTypeChange& change) {
  const ButtonNode& current = doc.button(button_id);
  const MenuNode& owner = doc.menu(current.parent_menu);

  MenuDocument next = doc;
  ButtonNode& button = next.button(button_id);
  std::vector<std::string> changed{button.id};

  if (change.new_type == ButtonType::kSubMenu) {
    if (!core::allows_submenus(owner.menu_type)) {
      throw Error(ErrorCode::kDepthViolation,
                  std::string(core::to_string(owner.menu_type)) + " menus allow only Function buttons");
    }
    if (!change.sub_menu_ref || change.sub_menu_ref->empty()) {
      throw Error(ErrorCode::kBadSubMenuRef, "SubMenu type needs a submenu reference");
    }
    const bool rebinding_same = current.sub_menu_id && *current.sub_menu_id == *change.sub_menu_ref;
    if (!rebinding_same) {
      check_submenu_target(doc, *change.sub_menu_ref, &owner.id);
    }
  } else if (!change.function_id || change.function_id->empty()) {
    throw Error(ErrorCode::kInvalidArgument, "Function type needs a function id");
  }

  // Release the previous submenu; it becomes the root of its own tree.
  if (current.sub_menu_id &&
      (change.new_type == ButtonType::kFunction || *current.sub_menu_id != *change.sub_menu_ref)) {
    next.menu(*current.sub_menu_id).is_root = true;
    changed.push_back(*current.sub_menu_id);
  }

  button.button_type = change.new_type;
  if (change.new_type == ButtonType::kSubMenu) {
    button.sub_menu_id = change.sub_menu_ref;
    button.function_id.reset();
    MenuNode& target = next.menu(*change.sub_menu_ref);
    target.is_root = false;
    changed.push_back(target.id);
  } else {
    button.sub_menu_id.reset();
    button.function_id = change.function_id;
  }
  return commit(doc, std::move(next), {}, {}, std::move(changed));
}

EditOutcome set_button_text(const MenuDocument& doc, std::string_view button_id, std::string text) {
  MenuDocument next = doc;
  ButtonNode& button = next.button(button_id);
  button.text = std::move(text);
  return commit(doc, std::move(next), {}, {}, {button.id});
}

EditOutcome set_button_icon(const MenuDocument& doc, std::string_view button_id, std::optional<std::string> icon_ref) {
  MenuDocument next = doc;
  ButtonNode& button = next.button(button_id);
  button.icon_ref = std::move(icon_ref);
  return commit(doc, std::move(next), {}, {}, {button.id});
}

EditOutcome remove_button(const MenuDocument& doc, std::string_view button_id) {
  const ButtonNode& target = doc.button(button_id);
  MenuDocument next = doc;
  std::vector<std::string> changed{target.id, target.parent_menu};

  if (target.sub_menu_id) {
    for (const auto& menu_id : core::subtree_menus(doc, *target.sub_menu_id)) {
      for (const auto& child_button : doc.menu(menu_id).buttons) {
        next.buttons.erase(child_button);
        changed.push_back(child_button);
      }
      next.menus.erase(menu_id);
      changed.push_back(menu_id);
    }
  }

  MenuNode& owner = next.menu(target.parent_menu);
  std::erase(owner.buttons, target.id);
  next.buttons.erase(target.id);
  return commit(doc, std::move(next), {}, {}, std::move(changed));
}

EditOutcome set_menu_title(const MenuDocument& doc, std::string_view menu_id, std::string title) {
  MenuDocument next = doc;
  MenuNode& menu = next.menu(menu_id);
  menu.title = std::move(title);
  return commit(doc, std::move(next), {}, {}, {menu.id});
}

EditOutcome add_button(const MenuDocument& doc, std::string_view menu_id, const ButtonSpec& spec) {
  const MenuNode& menu = doc.menu(menu_id);
  if (menu.buttons.size() >= core::max_button_num(menu.menu_type)) {
    throw Error(ErrorCode::kCapacityExceeded, kCapacityAlert,
                {{core::ViolationKind::kCapacityExceeded, menu.id,
                  std::to_string(menu.buttons.size() + 1) + " > " +
                      std::to_string(core::max_button_num(menu.menu_type))}});
  }
  check_spec_shape(spec, menu.menu_type);
  if (spec.button_type == ButtonType::kSubMenu) {
    check_submenu_target(doc, *spec.sub_menu_ref, &menu.id);
  }

  MenuDocument next = doc;
  ButtonNode button = make_button(spec, next.allocate_button_id(), menu.id);
  std::vector<std::string> changed{button.id, menu.id};
  if (button.sub_menu_id) {
    next.menu(*button.sub_menu_id).is_root = false;
    changed.push_back(*button.sub_menu_id);
  }
  std::string id = button.id;
  next.menu(menu_id).buttons.push_back(id);
  next.buttons.emplace(id, std::move(button));
  return commit(doc, std::move(next), {id}, {}, std::move(changed));
}

EditOutcome toggle_menu_active(const MenuDocument& doc, std::string_view menu_id) {
  MenuDocument next = core::switch_active(doc, menu_id);
  std::vector<std::string> changed;
  for (const auto& [id, menu] : next.menus) {
    if (menu.active != doc.menu(id).active) {
      changed.push_back(id);
    }
  }
  return commit(doc, std::move(next), {}, {}, std::move(changed));
}

}  // namespace vrmenu::editor
