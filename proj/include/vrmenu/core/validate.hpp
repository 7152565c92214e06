#pragma once

#include <vector>

#include "vrmenu/core/model.hpp"
#include "vrmenu/core/violation.hpp"

namespace vrmenu::core {

// Checks every structural invariant of the document. An empty result means
// the document is valid. Violations are ordered by rule, then by node id.
std::vector<Violation> validate(const MenuDocument& doc);

// Violations that concern a single menu and its own buttons.
std::vector<Violation> validate_menu(const MenuDocument& doc, const MenuNode& menu);

}  // namespace vrmenu::core
