#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace griesmer::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  /// A node limit stopped a search before it finished.
  kNotExhausted = 2,
  /// A verification search finished and found a code.
  kNotConfirmed = 3,
};

/// Run one invocation. `args` excludes the program name. Machine output goes
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace griesmer::cli
