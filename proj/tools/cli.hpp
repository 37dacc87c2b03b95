#pragma once

#include <iosfwd>

namespace ununfold::cli {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitConclusionFalse = 2;
inline constexpr int kExitUsage = 64;

/// Runs the tool with the given arguments (argv[0] is the program name).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ununfold::cli
