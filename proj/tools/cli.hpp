#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace equipart::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kNegative = 2,  // InsufficientClasses, oracle found=false, invalid partition
  kInternalError = 3,
  kBudgetExceeded = 4,
};

/// Runs one command line (without the program name) and returns its exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace equipart::cli
