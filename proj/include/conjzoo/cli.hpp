#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conjzoo {

/// Exit statuses of the command-line front end.
enum ExitStatus : int { kExitOk = 0, kExitInvalidInput = 1, kExitUsage = 2 };

/// Runs the `conjzoo` command line; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conjzoo
