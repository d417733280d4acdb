#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fockradial::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kNotRadial = 3,
};

/// Runs the command line in args (args[0] is the program name). Results go
/// to --out when given, otherwise to out; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fockradial::cli
