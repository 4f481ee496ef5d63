#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cfsep {

/// Process exit codes of the command line front-end.
enum ExitCode : int {
    kExitSeparable = 0,
    kExitOverlap = 1,
    kExitUnknown = 2,
    kExitUsage = 3,
    kExitValidation = 4,
};

/// Entry point of the `cfsep` tool; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cfsep
