#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plyalg {

// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,     // usage, parse or elaboration error
    kExitFuel = 2,      // normalization ran out of fuel
    kExitCheckFailed = 3,
};

// Runs the command line `args` (without the program name), writing results to
// `out` and diagnostics to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace plyalg
