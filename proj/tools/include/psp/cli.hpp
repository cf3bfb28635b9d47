#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace psp::cli {

/// Exit codes of run().
enum ExitCode : int {
    ok = 0,
    verification_failed = 1,
    parse_error = 2,
    domain_error = 3,
};

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace psp::cli
