#pragma once

#include <string>
#include <vector>

namespace tmrat::cli {

struct Outcome {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name) and captures its output.
/// Exit codes: 0 success, 1 domain rejection, 2 parse or usage error.
Outcome run(const std::vector<std::string>& args);

}  // namespace tmrat::cli
