#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace glmn::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kViolation = 2, kInternal = 3 };

/// Runs one command line (without the program name). Output goes to `out`
/// unless -o is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace glmn::cli
