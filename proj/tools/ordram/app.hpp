#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordram::cli {

enum ExitCode : int {
  kOk = 0,
  kForbiddenCopy = 1,
  kUsage = 2,
  kBudgetExhausted = 3,
};

/// Runs one `ordram` invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordram::cli
