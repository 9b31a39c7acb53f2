#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kirk {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitInternal = 3;
inline constexpr int kExitArity = 4;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kirk
