#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace infsym {

/// Exit codes of the command-line front end.
enum ExitCode : int { exit_ok = 0, exit_input = 1, exit_check_failed = 2 };

/// Runs one invocation; `args` excludes the program name. JSON goes to `out`
/// (or the --out file), diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace infsym
