#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace charpoly::cli {

enum ExitCode : int {
  kOk = 0,
  kCounterexample = 1,
  kUsage = 2,
  kGuardrail = 3,
};

/// Runs one command line (args excludes the program name) and returns the
/// process exit code. All output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace charpoly::cli
