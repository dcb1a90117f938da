#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kcontact {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerdictFalse = 1,
  kExitInputError = 2,
  kExitInternalError = 3,
};

/// Runs one invocation; args excludes the program name. Reports go to out,
/// diagnostics to err (in --json mode errors are reported on out as well).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kcontact
