#pragma once

// Command-line front end. Exit code 0 = success, 1 = a mathematically
// meaningful property violation was found (never used for I/O problems),
// 2 = invalid input or arguments.

#include <iosfwd>
#include <string>
#include <vector>

namespace specrad {

struct CommandResult {
  int exit_code = 0;
  std::string output;       // stdout payload
  std::string diagnostics;  // stderr payload (usage, progress, witnesses)
};

// argv excludes the program name, e.g. {"gen", "gmpq", "-m", "5", "-p", "2", "-q", "1"}.
CommandResult run_command(const std::vector<std::string> &argv, std::istream &in);

}  // namespace specrad
