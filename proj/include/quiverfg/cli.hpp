#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qfg::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,     // bad arguments or unparsable input
  kNegative = 3,  // the computation finished with a negative verdict
  kInternal = 4,
};

struct RunResult {
  std::string text;
  int exit_code = kOk;
};

// Runs the command line tool on args (without the program name).
RunResult run(const std::vector<std::string>& args);

// Named reproduction scenarios: "example4" and "hhsquare".
std::vector<std::string> scenarios();
RunResult reproduce(const std::string& name, bool machine = false, unsigned long seed = 1);

}  // namespace qfg::cli
