#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ginirep::cli {

/// Stable process exit codes.
enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kInputError = 2,       // malformed input, invalid partition, resource limit
    kCrossCheckFailed = 3  // two independent routes disagree, or arithmetic overflow
};

/// Runs the command line `args` (args[0] is the program name) and returns
/// the exit code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ginirep::cli
