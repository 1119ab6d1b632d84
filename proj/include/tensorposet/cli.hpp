#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tensorposet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitViolation = 3;

/// Runs the command line `args` (without the program name). Results go to `out`,
/// diagnostics and usage text to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tensorposet::cli
