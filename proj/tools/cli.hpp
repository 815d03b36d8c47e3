#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace swapalg::cli {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kParse = 3,
  kPrecondition = 4,
};

/// Runs one command line (without the program name), writing the report to `out` and
/// diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace swapalg::cli
