#include <iostream>

#include "quiverfg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto r = qfg::cli::run(args);
  (r.exit_code == qfg::cli::kUsage ? std::cerr : std::cout) << r.text;
  return r.exit_code;
}
