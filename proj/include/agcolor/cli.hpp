#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace agcolor::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kBudgetExceeded = 3,
};

/// Runs one command. args excludes the program name. Results go to `out`
/// unless --out names a file, in which case a manifest is written beside it.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Environment variable holding the default oracle budget in seconds.
inline constexpr const char* kBudgetEnv = "AGCOLOR_BUDGET";

}  // namespace agcolor::cli
