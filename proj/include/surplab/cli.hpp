#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace surplab::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kNotCertified = 2 };

/// Runs the command line `args` (without the program name). Writes the human
/// summary to `out`, diagnostics to `err`, and the JSON report to the path
/// given by --json.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace surplab::cli
