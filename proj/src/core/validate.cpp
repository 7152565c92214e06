#include "vrmenu/core/validate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace vrmenu::core {

std::vector<Violation> validate_menu(const MenuDocument& doc, const MenuNode& menu) {
  std::vector<Violation> out;
  const std::size_t capacity = max_button_num(menu.menu_type);
  if (menu.buttons.size() > capacity) {
    out.push_back({ViolationKind::kCapacityExceeded, menu.id,
                   std::to_string(menu.buttons.size()) + " > " + std::to_string(capacity)});
  }
  if (!position_allowed(menu.menu_type, menu.position_mode)) {
    out.push_back({ViolationKind::kPositionNotAllowed, menu.id,
                   std::string(to_string(menu.position_mode)) + " not allowed for " +
                       std::string(to_string(menu.menu_type))});
  }
  std::set<std::string> listed;
  for (const auto& button_id : menu.buttons) {
    if (!listed.insert(button_id).second) {
      out.push_back({ViolationKind::kDuplicateListing, menu.id, "button " + button_id + " listed twice"});
      continue;
    }
    const ButtonNode* button = doc.find_button(button_id);
    if (button == nullptr) {
      out.push_back({ViolationKind::kBadListing, menu.id, "listed button " + button_id + " does not exist"});
    } else if (button->parent_menu != menu.id) {
      out.push_back({ViolationKind::kBadListing, menu.id,
                     "listed button " + button_id + " belongs to " + button->parent_menu});
    }
  }
  return out;
}

std::vector<Violation> validate(const MenuDocument& doc) {
  std::vector<Violation> out;
  if (doc.format_version != kFormatVersion) {
    out.push_back({ViolationKind::kFormatVersion, "", "unsupported formatVersion " + std::to_string(doc.format_version)});
  }

  for (const auto& [id, menu] : doc.menus) {
    auto menu_violations = validate_menu(doc, menu);
    out.insert(out.end(), menu_violations.begin(), menu_violations.end());
  }

  std::map<std::string, std::vector<std::string>> parents_of_menu;
  for (const auto& [id, button] : doc.buttons) {
    const MenuNode* parent = doc.find_menu(button.parent_menu);
    if (parent == nullptr) {
      out.push_back({ViolationKind::kDanglingParent, id, "parent menu " + button.parent_menu + " does not exist"});
    } else {
      if (std::count(parent->buttons.begin(), parent->buttons.end(), id) == 0) {
        out.push_back({ViolationKind::kButtonNotListed, id, "not listed by parent menu " + parent->id});
      }
      if (button.button_type == ButtonType::kSubMenu && !allows_submenus(parent->menu_type)) {
        out.push_back({ViolationKind::kDepthViolation, id,
                       "SubMenu button on " + std::string(to_string(parent->menu_type)) + " menu " + parent->id});
      }
    }

    const bool has_sub = button.sub_menu_id.has_value();
    const bool has_fn = button.function_id.has_value() && !button.function_id->empty();
    if (button.button_type == ButtonType::kSubMenu && (!has_sub || button.function_id.has_value())) {
      out.push_back({ViolationKind::kButtonTypeMismatch, id, "SubMenu button needs subMenuId and no functionId"});
    } else if (button.button_type == ButtonType::kFunction && (!has_fn || has_sub)) {
      out.push_back({ViolationKind::kButtonTypeMismatch, id, "Function button needs functionId and no subMenuId"});
    }

    if (has_sub) {
      if (doc.find_menu(*button.sub_menu_id) == nullptr) {
        out.push_back({ViolationKind::kDanglingSubMenu, id, "submenu " + *button.sub_menu_id + " does not exist"});
      } else {
        parents_of_menu[*button.sub_menu_id].push_back(id);
      }
    }
  }

  for (const auto& [menu_id, parents] : parents_of_menu) {
    if (parents.size() > 1) {
      std::string detail = "referenced by";
      for (const auto& p : parents) {
        detail += " " + p;
      }
      out.push_back({ViolationKind::kDoubleParent, menu_id, detail});
    }
    if (doc.menu(menu_id).is_root) {
      out.push_back({ViolationKind::kRootReferenced, menu_id, "root menu bound as submenu of " + parents.front()});
    }
  }

  // Walk each menu up through its parent buttons; revisiting a menu means a cycle.
  std::set<std::string> reported;
  for (const auto& [start, menu] : doc.menus) {
    std::vector<std::string> path;
    std::string current = start;
    while (true) {
      if (std::find(path.begin(), path.end(), current) != path.end()) {
        auto cycle_begin = std::find(path.begin(), path.end(), current);
        std::string smallest = *std::min_element(cycle_begin, path.end());
        if (reported.insert(smallest).second) {
          out.push_back({ViolationKind::kCycle, smallest, "submenu references form a cycle"});
        }
        break;
      }
      path.push_back(current);
      auto it = parents_of_menu.find(current);
      if (it == parents_of_menu.end()) {
        break;
      }
      const ButtonNode& parent_button = doc.button(it->second.front());
      if (doc.find_menu(parent_button.parent_menu) == nullptr) {
        break;
      }
      current = parent_button.parent_menu;
    }
  }

  return out;
}

}  // namespace vrmenu::core
