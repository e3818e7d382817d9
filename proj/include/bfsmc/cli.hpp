#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bfsmc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCheckFailed = 2;

/// Entry point of the `bfsmc` tool. `args` excludes the program name.
/// Returns 0 when all checks pass, 1 on usage or config errors, 2 when a declared check fails.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bfsmc
