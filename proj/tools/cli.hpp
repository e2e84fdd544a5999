#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace searchtopo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvariant = 2;

/// Full command-line entry point. args[0] is the program name. Reports go to `out`,
/// diagnostics and errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace searchtopo::cli
