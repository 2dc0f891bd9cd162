#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lazard {

/// Exit statuses of the command-line tool.
enum ExitStatus : int { kExitPass = 0, kExitMismatch = 1, kExitInput = 2 };

/// Runs one command; args excludes the program name. JSON goes to `out`
/// (or to --out), diagnostics and tables to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lazard
