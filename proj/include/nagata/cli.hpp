#pragma once

// Command-line front end.  run() is the whole program minus main(): it
// parses argv-style arguments, writes to the given streams, and returns the
// process exit code, so tests can drive it in-process.
//
// Exit codes: 0 success (Undecided included), 2 invalid input,
// 3 oracle budget exceeded, 4 inconclusive oracle under --strict.

#include <iosfwd>
#include <string>
#include <vector>

namespace nagata::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitInconclusive = 4;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nagata::cli
