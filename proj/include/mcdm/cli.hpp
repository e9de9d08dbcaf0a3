#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mcdm::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 2,
  kInput = 3,
  kValidation = 4,
};

// Runs one command line (args[0] is the program name). Results go to `out`,
// diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcdm::cli
