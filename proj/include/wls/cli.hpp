#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wls::cli {

/// Exit codes of the `wls` tool.
enum ExitCode : int { ok = 0, input_error = 1, not_converged = 2 };

/// Runs one `wls` invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wls::cli
