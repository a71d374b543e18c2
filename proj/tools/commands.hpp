#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ordsemi::cli {

enum ExitCode : int { kOk = 0, kFindings = 1, kUsage = 2 };

/// Runs one command line (args excludes the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err);

}  // namespace ordsemi::cli
