#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace congruence::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitGenericity = 3;
inline constexpr int kExitMismatch = 4;

/// Runs one invocation of congruence-lab. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace congruence::cli
