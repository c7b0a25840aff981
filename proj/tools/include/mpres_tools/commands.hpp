#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mpres::tools {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2, kGuardExceeded = 3 };

/// Runs the mpres command line with `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mpres::tools
