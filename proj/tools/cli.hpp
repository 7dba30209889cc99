#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptc::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kBudgetExhausted = 2,
  kViolated = 3,
};

/// Relative output paths resolve against this directory when it is set.
inline constexpr const char* kOutputDirEnv = "PTC_OUTPUT_DIR";

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptc::cli
