#include <iostream>
#include <string>
#include <vector>

#include "vlp/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  const vlp::CliResult r = vlp::cmd_dispatch(args);
  (r.exit_code == 2 ? std::cerr : std::cout) << r.output;
  return r.exit_code;
}
