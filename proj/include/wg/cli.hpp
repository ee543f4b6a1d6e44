#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wg {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitInvalidInput = 2,
  kExitGenericity = 3,
  kExitClassMismatch = 4,
  kExitSynthesisFailure = 5,
};

/// Runs one `wgc` command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wg
