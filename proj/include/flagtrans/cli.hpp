#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flagtrans::cli {

/// Exit codes: every requested check passed / some check failed / bad usage.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs one command line (without the program name). Reports go to out,
/// diagnostics and usage text to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagtrans::cli
