#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace packlab::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,             // computed; the tested property holds
    kPropertyFails = 1,  // computed; the tested property does not hold
    kInputError = 2,
    kBudgetExceeded = 3,
};

/// Runs one command line (args excludes the program name). The report goes
/// to `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace packlab::cli
