#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternalFailure = 1;
inline constexpr int kExitInvalid = 2;

/// Runs one subcommand. `args` excludes the program name.
/// Returns 0 when every internal check passes, 1 on an internal failure or I/O error,
/// 2 on invalid parameters or usage errors (usage text goes to `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lb::cli
