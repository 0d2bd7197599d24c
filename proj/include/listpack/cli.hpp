#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace listpack::cli {

/// Process exit codes; every run ends in exactly one of them.
enum ExitCode : int {
    exit_ok = 0,         // success / object found
    exit_negative = 1,   // certified negative result
    exit_input = 2,      // input or usage error
    exit_exhausted = 3,  // search budget exhausted
};

/// Runs one subcommand. `args` excludes the program name. The first stdout
/// line is always `STATUS=<ok|negative|error|exhausted> VALUE=<n or empty>`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace listpack::cli
