#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace alexcalc {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitIdentityFails = 1,
  kExitInputError = 2,
  kExitPrecondition = 3,
};

/// Runs one command line (args excludes the program name) against the given
/// streams and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace alexcalc
