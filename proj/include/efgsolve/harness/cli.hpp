#pragma once

#include <ostream>

namespace efg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitArgument = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitIo = 4;

// Default directory for output files when no path flag is given.
inline constexpr const char* kOutDirVariable = "EFGSOLVE_OUT_DIR";

// Entry point of the efgsolve command line; argv[0] is the program name.
// Never throws: errors are printed to `err` and mapped to exit codes.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace efg
