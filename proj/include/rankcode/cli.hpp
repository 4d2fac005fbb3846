#pragma once

#include <string>
#include <vector>

namespace rankcode {

struct CommandResult {
  int exit_code = 0;  // 0 ok, 1 verification failure, 2 bad input, 3 budget exceeded
  std::string out;
  std::string err;
};

// argv excludes the program name.
CommandResult run_command(const std::vector<std::string>& argv);

}  // namespace rankcode
