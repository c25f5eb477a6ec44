#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hcolor {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitViolation = 1,  // a hypothesis-satisfying instance failed its conclusion
    kExitInput = 2,      // usage or malformed input
    kExitExhausted = 3,  // search spent its budget or space
};

/// Entry point behind the `hcolor` executable. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hcolor
