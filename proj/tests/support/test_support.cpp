#include "test_support.hpp"

#include <iterator>

#include "vrmenu/error.hpp"

namespace vrmenu::testing {

using core::ButtonType;
using core::MenuType;

editor::ButtonSpec function_spec(const std::string& name, const std::string& function_id) {
  editor::ButtonSpec spec;
  spec.name = name;
  spec.text = name;
  spec.button_type = ButtonType::kFunction;
  spec.function_id = function_id;
  return spec;
}

editor::ButtonSpec submenu_spec(const std::string& name, const std::string& menu_id) {
  editor::ButtonSpec spec;
  spec.name = name;
  spec.text = name;
  spec.button_type = ButtonType::kSubMenu;
  spec.sub_menu_ref = menu_id;
  return spec;
}

editor::CreateMenuRequest request(MenuType type, std::size_t function_buttons, bool root, const std::string& name) {
  editor::CreateMenuRequest req;
  req.menu_name = name;
  req.menu_title = name;
  req.menu_type = type;
  req.is_root_menu = root;
  for (std::size_t i = 0; i < function_buttons; ++i) {
    req.button_specs.push_back(function_spec("item" + std::to_string(i), "fn" + std::to_string(i)));
  }
  return req;
}

core::MenuDocument single_menu(MenuType type, std::size_t n) {
  return editor::create_menu(core::MenuDocument{}, request(type, n)).document;
}

core::MenuDocument three_level_chain() {
  core::MenuDocument doc;
  doc = editor::create_menu(doc, request(MenuType::kPie, 2, false, "leaf")).document;  // m1 b2 b3
  auto mid = request(MenuType::kList, 1, false, "mid");
  mid.button_specs.push_back(submenu_spec("open leaf", "m1"));
  doc = editor::create_menu(doc, mid).document;  // m4 b5 b6
  auto top = request(MenuType::kList, 0, true, "top");
  top.button_specs.push_back(submenu_spec("open mid", "m4"));
  doc = editor::create_menu(doc, top).document;  // m7 b8
  return doc;
}

namespace {

template <typename Map>
std::string pick_key(const Map& map, std::mt19937_64& rng) {
  if (map.empty()) {
    return "missing";
  }
  auto it = map.begin();
  std::advance(it, std::uniform_int_distribution<std::size_t>(0, map.size() - 1)(rng));
  return it->first;
}

std::size_t below(std::mt19937_64& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

// Mostly real ids, sometimes unknown ones.
std::string some_menu(const core::MenuDocument& doc, std::mt19937_64& rng) {
  return below(rng, 10) == 0 ? "m999999" : pick_key(doc.menus, rng);
}
std::string some_button(const core::MenuDocument& doc, std::mt19937_64& rng) {
  return below(rng, 10) == 0 ? "nope" : pick_key(doc.buttons, rng);
}

// Usually a menu that can legally be bound (declared non-root, no parent).
std::string bindable_menu(const core::MenuDocument& doc, std::mt19937_64& rng) {
  std::vector<std::string> free;
  for (const auto& [id, m] : doc.menus) {
    if (!m.is_root && core::parent_button_of(doc, id) == nullptr) {
      free.push_back(id);
    }
  }
  if (free.empty() || below(rng, 4) == 0) {
    return some_menu(doc, rng);
  }
  return free[below(rng, free.size())];
}

editor::ButtonSpec random_spec(const core::MenuDocument& doc, std::mt19937_64& rng) {
  editor::ButtonSpec spec = below(rng, 4) == 0 ? submenu_spec(random_text(rng), bindable_menu(doc, rng))
                                               : function_spec(random_text(rng), "fn" + std::to_string(below(rng, 50)));
  spec.text = random_text(rng);
  if (below(rng, 3) == 0) {
    spec.icon_ref = "icons/" + std::to_string(below(rng, 20));
  }
  return spec;
}

}  // namespace

std::string random_text(std::mt19937_64& rng) {
  static const std::vector<std::string> kPieces = {"Play", "Quit", "設定", "Ünïcode", "a\"b", "back\\slash", "",
                                                    " ", "tab\tx", "emoji \xF0\x9F\x8E\xAE", "Tools", "x"};
  std::string s;
  const std::size_t parts = below(rng, 3);
  for (std::size_t i = 0; i < parts; ++i) {
    s += kPieces[below(rng, kPieces.size())];
  }
  return s;
}

EditAttempt random_edit(const core::MenuDocument& doc, std::mt19937_64& rng) {
  static const MenuType kTypes[] = {MenuType::kList, MenuType::kMatrix, MenuType::kPie, MenuType::kRing};
  switch (below(rng, 8)) {
  case 0:
  case 1: {
    editor::CreateMenuRequest req;
    req.menu_type = kTypes[below(rng, 4)];
    req.menu_name = random_text(rng);
    req.menu_title = random_text(rng);
    req.is_root_menu = below(rng, 3) != 0;
    const std::size_t n = below(rng, 15);
    for (std::size_t i = 0; i < n; ++i) {
      req.button_specs.push_back(random_spec(doc, rng));
    }
    return {"create", editor::create_menu(doc, req)};
  }
  case 2:
    return {"add", editor::add_button(doc, some_menu(doc, rng), random_spec(doc, rng))};
  case 3:
    return {"remove", editor::remove_button(doc, some_button(doc, rng))};
  case 4: {
    editor::ButtonTypeChange change;
    if (below(rng, 2) == 0) {
      change.new_type = ButtonType::kSubMenu;
      change.sub_menu_ref = bindable_menu(doc, rng);
    } else {
      change.new_type = ButtonType::kFunction;
      change.function_id = "fn" + std::to_string(below(rng, 50));
    }
    return {"retype", editor::set_button_type(doc, some_button(doc, rng), change)};
  }
  case 5:
    return {"title", editor::set_menu_title(doc, some_menu(doc, rng), random_text(rng))};
  case 6:
    if (below(rng, 2) == 0) {
      return {"text", editor::set_button_text(doc, some_button(doc, rng), random_text(rng))};
    }
    return {"icon", editor::set_button_icon(doc, some_button(doc, rng),
                                            below(rng, 2) == 0 ? std::nullopt
                                                               : std::optional<std::string>(random_text(rng)))};
  default:
    return {"toggle", editor::toggle_menu_active(doc, some_menu(doc, rng))};
  }
}

core::MenuDocument random_document(std::uint64_t seed, std::size_t steps) {
  std::mt19937_64 rng(seed);
  core::MenuDocument doc;
  for (std::size_t i = 0; i < steps; ++i) {
    try {
      doc = random_edit(doc, rng).outcome.document;
    } catch (const Error&) {
    }
  }
  return doc;
}

}  // namespace vrmenu::testing
