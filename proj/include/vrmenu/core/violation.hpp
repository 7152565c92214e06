#pragma once

#include <string>

namespace vrmenu::core {

enum class ViolationKind {
  kCapacityExceeded,
  kDoubleParent,
  kCycle,
  kDanglingSubMenu,
  kDanglingParent,
  kButtonNotListed,
  kDuplicateListing,
  kBadListing,
  kRootReferenced,
  kPositionNotAllowed,
  kDepthViolation,
  kButtonTypeMismatch,
  kFormatVersion,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string node_id;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

}  // namespace vrmenu::core
