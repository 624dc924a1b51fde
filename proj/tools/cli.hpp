#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jcs::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kInfeasible = 2,
    kConvergence = 3,
    kSelftestFailed = 4,
};

/// Run one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jcs::cli
