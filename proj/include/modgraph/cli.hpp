#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace modgraph {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitCheckFailed = 2,
  kExitNoHits = 3,
};

/// Runs the tool on `args` (without the program name). Output is buffered
/// and written to `out` only once a command has finished.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modgraph
