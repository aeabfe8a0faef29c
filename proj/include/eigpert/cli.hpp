#pragma once

#include <ostream>

namespace eigpert {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,  // a proved relation failed; a reproduction bundle was written
  kExitInput = 2,      // usage error, unreadable or malformed input, unmet hypothesis
};

/// Runs one command line (argv[0] is the program name) and returns the exit
/// code. Reports go to `out`; diagnostics and the fuzz timing line go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eigpert
