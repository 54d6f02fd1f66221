#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hdakit::cli {

/// Exit codes of every command.
enum ExitCode : int {
  kTrue = 0,   // success, or the verdict holds
  kFalse = 1,  // the verdict fails; a counterexample was printed
  kError = 2,  // bad input or usage
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hdakit::cli
