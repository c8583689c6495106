#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permcode::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line. `args` excludes the program name. Words come from
/// the trailing positional argument, or one per line from `in` when it is
/// absent.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace permcode::cli
