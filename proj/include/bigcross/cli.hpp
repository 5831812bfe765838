#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bigcross {

/// Process exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitData = 2 };

/// Runs the command line `args` (args[0] is the program name). Subcommands:
/// generate, layout, measure, bench, render.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bigcross
