#pragma once

#include <ostream>
#include <span>
#include <string>

namespace fracdyn::cli {

/// Exit codes: 0 success, 1 usage or input error, 2 domain event
/// (divergence, kernel bound violation, NSPO required but absent).
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitDomain = 2 };

/// Runs the command line `args` (program name excluded). Data goes to `out`
/// unless redirected with --output; diagnostics go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace fracdyn::cli
