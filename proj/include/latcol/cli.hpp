#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace latcol {

// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,            // success, or membership established
    kExitRefuted = 1,       // non-membership, or a failed verification
    kExitInputError = 2,    // malformed input or usage
    kExitPrecondition = 3,  // well-formed input violating a mathematical precondition
};

/// Runs one command line (without the program name), writing the report to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latcol
