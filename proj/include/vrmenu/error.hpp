#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "vrmenu/core/violation.hpp"

namespace vrmenu {

enum class ErrorCode {
  kUnknownId,
  kBadSubMenuRef,
  kDepthViolation,
  kCapacityExceeded,
  kInvalidArgument,
  kInvalidMenu,
  kNonPositiveWidth,
  kBehindViewer,
  kEmptyMenu,
  kSyntax,
  kSchema,
  kConstraint,
  kRevisionConflict,
};

const char* to_string(ErrorCode code);

// Every failing operation throws this. Operations are transactional: a throw
// means the input document was not modified.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<core::Violation> violations = {})
      : std::runtime_error(message), code_(code), violations_(std::move(violations)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<core::Violation>& violations() const noexcept { return violations_; }

 private:
  ErrorCode code_;
  std::vector<core::Violation> violations_;
};

// Alert text shown when a menu is asked to hold more buttons than its type allows.
inline constexpr const char* kCapacityAlert = "the number of buttons exceeds the maximum";

}  // namespace vrmenu
