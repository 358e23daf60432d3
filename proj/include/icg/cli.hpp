#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace icg::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kCounterexample = 2,
    kBudgetExceeded = 3,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace icg::cli
