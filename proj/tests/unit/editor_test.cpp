#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "vrmenu/core/validate.hpp"
#include "vrmenu/editor/editor.hpp"
#include "vrmenu/error.hpp"

namespace vrmenu::editor {
namespace {

using core::ButtonType;
using core::MenuDocument;
using core::MenuType;
using testing::function_spec;
using testing::request;
using testing::single_menu;
using testing::submenu_spec;
using testing::three_level_chain;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(CreateMenu, PieClampKeepsPrefixAndWarns) {
  const auto out = create_menu(MenuDocument{}, request(MenuType::kPie, 6));
  const auto& menu = out.document.menu("m1");
  ASSERT_EQ(menu.buttons.size(), 4u);
  ASSERT_EQ(out.warnings.size(), 1u);
  EXPECT_NE(out.warnings[0].find("exceeds the maximum"), std::string::npos);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(out.document.button(menu.buttons[i]).name, "item" + std::to_string(i));
    EXPECT_EQ(out.document.button(menu.buttons[i]).parent_menu, "m1");
  }
  EXPECT_EQ(menu.position_mode, core::PositionMode::kHandReferenced);
  EXPECT_EQ(out.document.revision, 1u);
}

TEST(CreateMenu, WithinCapacityNoWarning) {
  for (MenuType t : {MenuType::kList, MenuType::kMatrix, MenuType::kPie, MenuType::kRing}) {
    const auto out = create_menu(MenuDocument{}, request(t, core::max_button_num(t)));
    EXPECT_TRUE(out.warnings.empty());
    EXPECT_EQ(out.document.menu("m1").buttons.size(), core::max_button_num(t));
  }
  const auto empty = create_menu(MenuDocument{}, request(MenuType::kList, 0));
  EXPECT_TRUE(empty.warnings.empty());
  EXPECT_TRUE(core::validate(empty.document).empty());
}

TEST(CreateMenu, SubMenuRules) {
  MenuDocument doc = create_menu(MenuDocument{}, request(MenuType::kList, 1, true, "root")).document;  // m1 b2
  doc = create_menu(doc, request(MenuType::kList, 1, false, "child")).document;                       // m3 b4

  auto to_root = request(MenuType::kList, 0);
  to_root.button_specs.push_back(submenu_spec("x", "m1"));
  EXPECT_EQ(code_of([&] { create_menu(doc, to_root); }), ErrorCode::kBadSubMenuRef);

  auto to_unknown = request(MenuType::kList, 0);
  to_unknown.button_specs.push_back(submenu_spec("x", "m42"));
  EXPECT_EQ(code_of([&] { create_menu(doc, to_unknown); }), ErrorCode::kBadSubMenuRef);

  auto on_ring = request(MenuType::kRing, 0);
  on_ring.button_specs.push_back(submenu_spec("x", "m3"));
  EXPECT_EQ(code_of([&] { create_menu(doc, on_ring); }), ErrorCode::kDepthViolation);

  auto twice = request(MenuType::kList, 0);
  twice.button_specs.push_back(submenu_spec("x", "m3"));
  twice.button_specs.push_back(submenu_spec("y", "m3"));
  EXPECT_EQ(code_of([&] { create_menu(doc, twice); }), ErrorCode::kBadSubMenuRef);

  auto ok = request(MenuType::kList, 0);
  ok.button_specs.push_back(submenu_spec("x", "m3"));
  const auto out = create_menu(doc, ok);
  EXPECT_EQ(out.created_ids, (std::vector<std::string>{"m5", "b6"}));
  EXPECT_EQ(core::depth_of(out.document, "m5"), 2);

  auto bound_again = request(MenuType::kList, 0);
  bound_again.button_specs.push_back(submenu_spec("x", "m3"));
  EXPECT_EQ(code_of([&] { create_menu(out.document, bound_again); }), ErrorCode::kBadSubMenuRef);

  auto missing_fn = request(MenuType::kList, 0);
  missing_fn.button_specs.push_back(ButtonSpec{"n", "n", std::nullopt, ButtonType::kFunction, std::nullopt, std::nullopt});
  EXPECT_EQ(code_of([&] { create_menu(doc, missing_fn); }), ErrorCode::kInvalidArgument);

  auto bad_position = request(MenuType::kPie, 1);
  bad_position.position_mode = core::PositionMode::kFixed;
  EXPECT_EQ(code_of([&] { create_menu(doc, bad_position); }), ErrorCode::kInvalidArgument);
}

TEST(Selection, Kinds) {
  const auto doc = single_menu(MenuType::kList, 1);
  EXPECT_EQ(resolve_selection(doc, "m1"), SelectionKind::kMenu);
  EXPECT_EQ(resolve_selection(doc, "b2"), SelectionKind::kButton);
  EXPECT_EQ(resolve_selection(doc, "xyz-unknown"), SelectionKind::kNone);
  EXPECT_EQ(to_string(SelectionKind::kNone), "none");
}

TEST(SetButtonType, BindAndRelease) {
  MenuDocument doc = create_menu(MenuDocument{}, request(MenuType::kList, 2)).document;  // m1 b2 b3
  doc = create_menu(doc, request(MenuType::kList, 1, false)).document;                   // m4 b5
  const auto bound = set_button_type(doc, "b2", {ButtonType::kSubMenu, "m4", std::nullopt});
  EXPECT_EQ(bound.document.button("b2").sub_menu_id, "m4");
  EXPECT_FALSE(bound.document.button("b2").function_id);
  EXPECT_FALSE(bound.document.menu("m4").is_root);
  EXPECT_EQ(bound.document.revision, doc.revision + 1);

  const auto released = set_button_type(bound.document, "b2", {ButtonType::kFunction, std::nullopt, "noop"});
  EXPECT_TRUE(released.document.menu("m4").is_root);
  EXPECT_EQ(core::parent_button_of(released.document, "m4"), nullptr);
  EXPECT_EQ(released.document.button("b2").function_id, "noop");

  // A detached menu cannot open itself.
  EXPECT_EQ(code_of([&] { set_button_type(doc, "b5", {ButtonType::kSubMenu, "m4", std::nullopt}); }),
            ErrorCode::kBadSubMenuRef);
  const MenuDocument chain = three_level_chain();
  EXPECT_EQ(code_of([&] { set_button_type(chain, "b2", {ButtonType::kSubMenu, "m4", std::nullopt}); }),
            ErrorCode::kDepthViolation);
  EXPECT_EQ(code_of([&] { set_button_type(chain, "zz", {ButtonType::kFunction, std::nullopt, "f"}); }),
            ErrorCode::kUnknownId);
}

TEST(SetFields, TextIconTitle) {
  const auto doc = single_menu(MenuType::kList, 2);
  EXPECT_EQ(set_button_text(doc, "b2", "Save").document.button("b2").text, "Save");
  EXPECT_EQ(set_button_icon(doc, "b2", "icons/save").document.button("b2").icon_ref, "icons/save");
  EXPECT_EQ(set_menu_title(doc, "m1", "Tools").document.menu("m1").title, "Tools");
  EXPECT_EQ(set_menu_title(doc, "m1", "").document.menu("m1").title, "");
  EXPECT_EQ(code_of([&] { set_button_text(doc, "b9", "x"); }), ErrorCode::kUnknownId);
  EXPECT_EQ(code_of([&] { set_button_icon(doc, "b9", std::nullopt); }), ErrorCode::kUnknownId);
  EXPECT_EQ(code_of([&] { set_menu_title(doc, "m9", "x"); }), ErrorCode::kUnknownId);
}

TEST(RemoveButton, MiddleAndCascade) {
  const auto doc = single_menu(MenuType::kList, 4);  // b2..b5
  const auto out = remove_button(doc, "b3");
  EXPECT_EQ(out.document.menu("m1").buttons, (std::vector<std::string>{"b2", "b4", "b5"}));

  const auto chain = three_level_chain();
  const auto cut = remove_button(chain, "b8");
  EXPECT_EQ(cut.document.menus.size(), 1u);
  EXPECT_TRUE(cut.document.menus.count("m7"));
  EXPECT_TRUE(cut.document.buttons.empty());
  EXPECT_EQ(code_of([&] { remove_button(chain, "b99"); }), ErrorCode::kUnknownId);
}

TEST(AddButton, CapacityAndRoundTrip) {
  const auto eight = single_menu(MenuType::kMatrix, 8);
  const auto nine = add_button(eight, "m1", function_spec("n", "f"));
  EXPECT_EQ(nine.document.menu("m1").buttons.size(), 9u);
  try {
    add_button(nine.document, "m1", function_spec("x", "f"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapacityExceeded);
    EXPECT_STREQ(e.what(), kCapacityAlert);
  }
  // add then remove restores the document modulo revision.
  MenuDocument back = remove_button(nine.document, nine.created_ids.at(0)).document;
  back.revision = eight.revision;
  EXPECT_EQ(back, eight);

  const auto pie3 = single_menu(MenuType::kPie, 3);
  EXPECT_EQ(add_button(pie3, "m1", function_spec("d", "f")).document.menu("m1").buttons.size(), 4u);
  EXPECT_EQ(code_of([&] { add_button(pie3, "m1", submenu_spec("d", "m1")); }), ErrorCode::kDepthViolation);
}

TEST(Toggle, ChangedIdsCoverCascade) {
  const auto out = toggle_menu_active(three_level_chain(), "m7");
  EXPECT_EQ(out.changed_ids.size(), 3u);
}

// Closure fuzz: random op sequences from random seeds.
TEST(EditorFuzz, ClosureAtomicityRevision) {
  std::size_t successes = 0;
  std::size_t failures = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    std::mt19937_64 rng(seed);
    MenuDocument doc;
    for (int step = 0; step < 25; ++step) {
      const MenuDocument before = doc;
      try {
        auto attempt = testing::random_edit(doc, rng);
        ASSERT_EQ(attempt.outcome.document.revision, before.revision + 1) << attempt.label;
        ASSERT_TRUE(core::validate(attempt.outcome.document).empty()) << attempt.label;
        for (const auto& [id, m] : attempt.outcome.document.menus) {
          ASSERT_LE(m.buttons.size(), core::max_button_num(m.menu_type));
        }
        doc = std::move(attempt.outcome.document);
        ++successes;
      } catch (const Error&) {
        ASSERT_EQ(doc, before);
        ++failures;
      }
    }
  }
  EXPECT_GT(successes, 1000u);
  EXPECT_GT(failures, 100u);
}

}  // namespace
}  // namespace vrmenu::editor
