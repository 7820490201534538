#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace simplicial::cli {

// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,      // command ran and any check passed
    kCheckFailed = 1,  // check ran and failed (not Euler, identity violated)
    kUsageError = 2,   // bad arguments or unreadable/malformed input
};

// Runs the command line `args` (without the program name), writing normal
// output to out and diagnostics to err. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simplicial::cli
