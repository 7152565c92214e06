#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vrmenu::cli {

// Exit codes of the vrmenu tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitConstraint = 2;
inline constexpr int kExitSyntax = 3;
inline constexpr int kExitUnknownId = 4;

// Runs the command line `args` (args[0] is the program name). Results go to
// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vrmenu::cli
