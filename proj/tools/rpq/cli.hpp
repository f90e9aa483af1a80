#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rpq::cli {

/// Exit statuses of the command-line front end.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kPrecondition = 3,
  kNumerical = 4,
};

/// Parses `args` (without the program name), runs the selected subcommand and
/// writes its artifacts. Diagnostics go to `err`, summaries to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rpq::cli
