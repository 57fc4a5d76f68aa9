#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frob::cli {

enum ExitCode : int {
  kOk = 0,
  kExpectationFailed = 1,
  kUsageError = 2,
  kDegreeGuard = 3,
};

/// Runs one `frobtool` invocation. `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frob::cli
