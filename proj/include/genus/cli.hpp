#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace genus::cli {

/// Exit codes: 0 success, 1 a mathematical check failed, 2 bad input.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

/// Runs one command. args excludes the program name. JSON goes to out,
/// diagnostics to err.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// GENUS_MAX_N, default 12.
int max_degree();

}  // namespace genus::cli
