#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace poz {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitInputError = 2 };

/// Runs the tool with argv-style arguments (args[0] is the program name),
/// writing the JSON document to `out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out);
int run_cli(int argc, char** argv);

} // namespace poz
