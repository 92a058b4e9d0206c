#include <iostream>

#include "tmrat_cli/app.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto outcome = tmrat::cli::run(args);
  std::cout << outcome.out;
  std::cerr << outcome.err;
  return outcome.exit_code;
}
