#pragma once

#include <string>
#include <vector>

namespace vlp {

struct CliResult {
  // 0: all checks pass or the query was answered; 1: a verification
  // failed; 2: usage or input error.
  int exit_code = 0;
  std::string output;
};

// argv[0] is the program name. Output of every stream is collected into
// `output`.
CliResult cmd_dispatch(const std::vector<std::string>& argv);

}  // namespace vlp
