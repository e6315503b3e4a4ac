#pragma once

#include <iosfwd>

namespace densepm::cli {

/// Exit codes are a scripting contract.
enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kResourceLimit = 3,
  kInconsistent = 4,
};

/// Runs the command line against the given streams and returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace densepm::cli
