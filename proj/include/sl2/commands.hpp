#pragma once

// Command-line front end. run_command takes the arguments after the program
// name and returns what the program should print and its exit status:
//   0 success, 1 verification failure, 2 usage or input error,
//   3 internal invariant violation.

#include <string>
#include <vector>

namespace sl2 {

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CommandResult run_command(const std::vector<std::string>& args);

}  // namespace sl2
