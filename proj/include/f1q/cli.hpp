#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace f1q {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInput = 2,
  kExitBudget = 3,
  kExitUncertified = 4,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace f1q
