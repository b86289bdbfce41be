#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mmetric::cli {

enum ExitCode : int { kVerified = 0, kViolation = 1, kUsage = 2 };

/// Parses args (without the program name), runs one subcommand and writes
/// the report to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mmetric::cli
