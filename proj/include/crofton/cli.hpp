#pragma once

#include <ostream>

#include "crofton/config.hpp"

namespace crofton {

/// Exit codes: 0 pass, 1 input error, 2 identity check failed.
enum ExitCode { kExitPass = 0, kExitInputError = 1, kExitIdentityFailure = 2 };

/// Parses the command line (subcommands predict, simulate, compare, verify,
/// transform; flags override a --config file) and executes it.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Executes a fully specified configuration and writes its JSON report.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace crofton
