#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "test_support.hpp"
#include "vrmenu/core/model.hpp"
#include "vrmenu/core/validate.hpp"
#include "vrmenu/error.hpp"

namespace vrmenu::core {
namespace {

using testing::single_menu;
using testing::three_level_chain;

bool has_violation(const std::vector<Violation>& vs, ViolationKind kind, const std::string& node) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.kind == kind && v.node_id == node; });
}

TEST(Capacity, TableValues) {
  EXPECT_EQ(max_button_num(MenuType::kPie), 4u);
  EXPECT_EQ(max_button_num(MenuType::kMatrix), 9u);
  EXPECT_EQ(max_button_num(MenuType::kList), 10u);
  EXPECT_EQ(max_button_num(MenuType::kRing), 12u);
}

TEST(Capacity, ConfigOverrideIsHonoured) {
  const CapacityTable saved = capacity_table();
  CapacityTable t = saved;
  t.list = 3;
  set_capacity_table(t);
  EXPECT_EQ(max_button_num(MenuType::kList), 3u);
  MenuDocument doc = single_menu(MenuType::kList, 5);
  EXPECT_EQ(doc.menu("m1").buttons.size(), 3u);
  set_capacity_table(saved);
  EXPECT_EQ(max_button_num(MenuType::kList), 10u);
}

TEST(Traits, PositionsAndDepth) {
  EXPECT_TRUE(position_allowed(MenuType::kPie, PositionMode::kHandReferenced));
  EXPECT_FALSE(position_allowed(MenuType::kPie, PositionMode::kFixed));
  EXPECT_TRUE(position_allowed(MenuType::kRing, PositionMode::kHeadReferenced));
  EXPECT_FALSE(position_allowed(MenuType::kRing, PositionMode::kHandReferenced));
  EXPECT_TRUE(position_allowed(MenuType::kList, PositionMode::kFixed));
  EXPECT_TRUE(position_allowed(MenuType::kMatrix, PositionMode::kHeadReferenced));
  EXPECT_FALSE(allows_submenus(MenuType::kPie));
  EXPECT_FALSE(allows_submenus(MenuType::kRing));
  EXPECT_TRUE(allows_submenus(MenuType::kList));
  EXPECT_EQ(traits(MenuType::kPie).trigger, TriggerMethod::kTouchpad);
  EXPECT_EQ(traits(MenuType::kRing).trigger, TriggerMethod::kRayCasting);
}

TEST(Validate, WellFormedIsEmpty) { EXPECT_TRUE(validate(single_menu(MenuType::kList, 4)).empty()); }

TEST(Validate, DoubleParent) {
  MenuDocument doc = three_level_chain();
  // b2 is a Function button on leaf Pie m1; retarget b5 (Function on m4) at m1 by hand.
  ButtonNode& b = doc.button("b5");
  b.button_type = ButtonType::kSubMenu;
  b.function_id.reset();
  b.sub_menu_id = "m1";
  const auto vs = validate(doc);
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].kind, ViolationKind::kDoubleParent);
  EXPECT_EQ(vs[0].node_id, "m1");
}

TEST(Validate, PieOverCapacity) {
  MenuDocument doc = single_menu(MenuType::kPie, 4);
  for (int i = 0; i < 2; ++i) {
    ButtonNode extra;
    extra.id = "x" + std::to_string(i);
    extra.parent_menu = "m1";
    extra.function_id = "f";
    doc.buttons[extra.id] = extra;
    doc.menu("m1").buttons.push_back(extra.id);
  }
  const auto vs = validate(doc);
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].kind, ViolationKind::kCapacityExceeded);
  EXPECT_EQ(vs[0].node_id, "m1");
  EXPECT_EQ(vs[0].detail, "6 > 4");
}

TEST(Validate, StructuralRules) {
  MenuDocument doc = three_level_chain();
  {
    MenuDocument d = doc;
    d.menu("m1").position_mode = PositionMode::kFixed;  // Pie must be hand-referenced
    EXPECT_TRUE(has_violation(validate(d), ViolationKind::kPositionNotAllowed, "m1"));
  }
  {
    MenuDocument d = doc;
    d.button("b2").function_id.reset();
    EXPECT_TRUE(has_violation(validate(d), ViolationKind::kButtonTypeMismatch, "b2"));
  }
  {
    MenuDocument d = doc;
    d.button("b6").sub_menu_id = "m404";
    EXPECT_TRUE(has_violation(validate(d), ViolationKind::kDanglingSubMenu, "b6"));
  }
  {
    MenuDocument d = doc;
    d.menu("m1").is_root = true;  // referenced by b6
    EXPECT_TRUE(has_violation(validate(d), ViolationKind::kRootReferenced, "m1"));
  }
  {
    MenuDocument d = doc;
    d.menu("m4").buttons.push_back("b5");
    EXPECT_TRUE(has_violation(validate(d), ViolationKind::kDuplicateListing, "m4"));
  }
  {
    MenuDocument d = doc;
    d.menu("m4").buttons.erase(d.menu("m4").buttons.begin());
    EXPECT_TRUE(has_violation(validate(d), ViolationKind::kButtonNotListed, "b5"));
  }
  {
    MenuDocument d = doc;
    d.button("b2").parent_menu = "m77";
    EXPECT_FALSE(validate(d).empty());
  }
  {
    // Pie button opening a submenu breaks the depth-1 rule.
    MenuDocument d = doc;
    ButtonNode& b = d.button("b2");
    b.button_type = ButtonType::kSubMenu;
    b.function_id.reset();
    b.sub_menu_id = "m7";
    d.menu("m7").is_root = false;
    EXPECT_TRUE(has_violation(validate(d), ViolationKind::kDepthViolation, "b2"));
  }
}

TEST(Validate, CycleIsReported) {
  MenuDocument doc = three_level_chain();
  // m4 -> m1 exists; make m1 a List opening m4 and detach m4 from m7.
  doc.menu("m1").menu_type = MenuType::kList;
  doc.menu("m1").position_mode = PositionMode::kFixed;
  doc.menu("m4").is_root = false;
  doc.menu("m7").buttons.clear();
  doc.buttons.erase("b8");
  ButtonNode& b = doc.button("b2");
  b.button_type = ButtonType::kSubMenu;
  b.function_id.reset();
  b.sub_menu_id = "m4";
  const auto vs = validate(doc);
  EXPECT_TRUE(has_violation(vs, ViolationKind::kCycle, "m1"));
}

TEST(Depth, Examples) {
  EXPECT_EQ(depth_of(single_menu(MenuType::kList, 3), "m1"), 1);
  const MenuDocument chain = three_level_chain();
  EXPECT_EQ(depth_of(chain, "m7"), 3);
  EXPECT_EQ(depth_of(chain, "m4"), 2);
  EXPECT_EQ(depth_of(chain, "m1"), 1);
  EXPECT_THROW(depth_of(chain, "zz"), Error);
}

TEST(Depth, SubtreeOrder) {
  EXPECT_EQ(subtree_menus(three_level_chain(), "m7"), (std::vector<MenuId>{"m7", "m4", "m1"}));
}

TEST(SwitchActive, DeactivationCascades) {
  const MenuDocument doc = three_level_chain();
  const MenuDocument off = switch_active(doc, "m7");
  EXPECT_EQ(off.revision, doc.revision + 1);
  for (const auto& [id, m] : off.menus) {
    EXPECT_FALSE(m.active) << id;
  }
  // Leaf back on: ancestors stay off.
  const MenuDocument leaf_on = switch_active(off, "m1");
  EXPECT_TRUE(leaf_on.menu("m1").active);
  EXPECT_FALSE(leaf_on.menu("m4").active);
  EXPECT_FALSE(leaf_on.menu("m7").active);
  EXPECT_FALSE(effectively_active(leaf_on, "m1"));
  EXPECT_THROW(switch_active(doc, "nope"), Error);
  try {
    switch_active(doc, "nope");
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownId);
  }
}

TEST(Ids, AllocationSkipsTakenIds) {
  MenuDocument doc;
  doc.menus["m1"] = MenuNode{"m1"};
  EXPECT_EQ(doc.allocate_menu_id(), "m2");
  EXPECT_EQ(doc.allocate_button_id(), "b3");
}

TEST(EnumText, RoundTrip) {
  for (MenuType t : {MenuType::kList, MenuType::kMatrix, MenuType::kPie, MenuType::kRing}) {
    EXPECT_EQ(parse_menu_type(to_string(t)), t);
  }
  for (PositionMode p : {PositionMode::kFixed, PositionMode::kHandReferenced, PositionMode::kHeadReferenced}) {
    EXPECT_EQ(parse_position_mode(to_string(p)), p);
  }
  for (ButtonType b : {ButtonType::kSubMenu, ButtonType::kFunction}) {
    EXPECT_EQ(parse_button_type(to_string(b)), b);
  }
  EXPECT_FALSE(parse_menu_type("list"));
}

// Forest properties over random documents.
class ForestProperty : public ::testing::TestWithParam<int> {};

TEST_P(ForestProperty, RandomDocumentsKeepInvariants) {
  const MenuDocument doc = testing::random_document(static_cast<std::uint64_t>(GetParam()) * 7919u + 3u, 60);
  EXPECT_TRUE(validate(doc).empty());
  std::set<MenuId> referenced;
  for (const auto& [id, b] : doc.buttons) {
    if (b.sub_menu_id) {
      referenced.insert(*b.sub_menu_id);
    }
  }
  for (const auto& [id, m] : doc.menus) {
    EXPECT_LE(m.buttons.size(), max_button_num(m.menu_type));
    // Declared roots are never referenced (parentless non-roots are detached submenus).
    if (m.is_root) {
      EXPECT_EQ(referenced.count(id), 0u) << id;
    }
    if (referenced.count(id) == 0 && !m.is_root) {
      EXPECT_EQ(parent_button_of(doc, id), nullptr);
    }
    if (!allows_submenus(m.menu_type)) {
      EXPECT_EQ(depth_of(doc, id), 1);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, ForestProperty, ::testing::Range(0, 40));

}  // namespace
}  // namespace vrmenu::core
