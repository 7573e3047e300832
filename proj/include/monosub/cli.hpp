#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace monosub::cli {

enum ExitCode : int {
    kAffirmative = 0,
    kNegative = 1,
    kInputError = 2,
    kNotApplicable = 3,
};

/// Runs the command line `args` (without the program name), writing human
/// output to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monosub::cli
