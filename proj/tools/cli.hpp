#pragma once

#include <iosfwd>

namespace pvg::cli {

enum ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kParameterError = 2,
  kMoveLimit = 3,
  kModeMismatch = 4,
  kParseFailure = 5,
};

// Runs the `pvg` command line. Normal output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pvg::cli
