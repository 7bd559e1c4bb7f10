#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace euler3d {

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitConfig = 2,
  kExitNumerical = 3,
  kExitIo = 4,
};

/// Runs one command line (args[0] is the program name).  Never throws;
/// errors are reported on `err` and mapped to an ExitStatus.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace euler3d
