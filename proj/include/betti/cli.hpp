#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace betti::cli {

enum ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kInputError = 2,
  kGuardExceeded = 3,
};

/// Runs one command line (without the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace betti::cli
