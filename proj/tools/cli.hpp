#pragma once

// The dyndeg command line as a library so tests can drive it in-process.

#include <ostream>
#include <string>
#include <vector>

namespace dyndeg::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_verify_failed = 1,
    exit_bad_input = 2,
    exit_resource_cap = 3,
};

/// args excludes the program name. Output goes to `out`; diagnostics and
/// usage text to `err`.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace dyndeg::cli
