#pragma once

#include <iosfwd>

namespace dbm {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitInputError = 2 };

/// Entry point of the `dbm` tool. Reports go to out, diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dbm
