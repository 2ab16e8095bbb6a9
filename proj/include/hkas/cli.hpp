#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hkas::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `hkas` tool. `args` excludes the program name.
/// Returns 0 when every requested check passed, 1 when a check failed and 2
/// on input or usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hkas::cli
