#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hfl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitTheoremMismatch = 1;
inline constexpr int kExitConjectureMismatch = 2;
inline constexpr int kExitUsage = 3;

/// Runs the command line given as argument list (without argv[0]).
/// All output goes to the supplied streams so tests can drive it
/// in-process.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hfl::cli
