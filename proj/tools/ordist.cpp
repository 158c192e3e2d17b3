#include "ordist/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto outcome = ordist::cli::run(args);
  std::cout << outcome.report;
  std::cerr << outcome.diagnostics;
  return outcome.exit_code;
}
