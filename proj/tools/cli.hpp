#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mvspec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 axiom violation, invalid filter or unexpected counterexample, 2 parse
/// or usage error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace mvspec::cli
