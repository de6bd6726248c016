#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace recgrow::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kInvalidParams = 2,
    kResourceLimit = 3,
};

/// Runs one subcommand. `args` excludes the program name. The report goes
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace recgrow::cli
