#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace invtqft::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;         // parse errors and invalid input
inline constexpr int kExitUndetermined = 3;  // mathematically open or unsupported

/// Runs one invocation; args excludes the program name. Results go to `out`,
/// diagnostics to `err`. Under --json every outcome, errors included, is a
/// single JSON document on `out` carrying a "reason" field on failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace invtqft::cli
