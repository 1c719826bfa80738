#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "zspace/measure.hpp"

namespace zspace::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerifyFailed = 1,
  kDomainError = 2,
  kBudgetError = 3,
};

/// sign = step(x1) - step(-x1), log_abs = log(abs(x1)), const1 = 1.
TameFunction builtin(std::string_view name);

/// Runs `zspace <args...>` (args exclude the program name); returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zspace::cli
