#include "specrad/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  specrad::CommandResult r = specrad::run_command(args, std::cin);
  std::cout << r.output;
  std::cerr << r.diagnostics;
  return r.exit_code;
}
