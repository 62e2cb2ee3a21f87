#pragma once

#include <iosfwd>

namespace cviso::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 2,
  kNumerical = 3,
  kIo = 4,
};

/// Parses argv and runs one subcommand (state, criteria, measures, sweep,
/// channel, fock). Errors are reported as a single line on `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cviso::cli
