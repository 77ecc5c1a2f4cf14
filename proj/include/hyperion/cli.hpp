#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperion {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // e.g. not a root, an axiom fails
inline constexpr int kExitUsage = 2;

// Runs one command. `args` excludes the program name. JSON goes to `out`,
// diagnostics and human-readable certificates to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperion
