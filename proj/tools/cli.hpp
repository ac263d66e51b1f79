#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rreg::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kDomain = 3,
    kInternal = 4,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rreg::cli
