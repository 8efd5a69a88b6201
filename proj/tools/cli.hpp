#pragma once

#include <ostream>
#include <span>
#include <string>

namespace zerosum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. Output goes to `out`
/// (a single JSON document with --json); diagnostics go to `err`.
/// Returns 0 on success, 1 when a verification reports violations, 2 on
/// usage or input errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace zerosum::cli
