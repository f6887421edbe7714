#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace recolor::cli {

/// Process exit codes.
enum ExitCode : int {
  kYes = 0,
  kNo = 1,
  kInputError = 2,
  kBudgetExceeded = 3,
  kMismatch = 4,
};

/// Runs the `recolor` command line on args (args[0] is the program name).
/// Results go to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace recolor::cli
