#include <iostream>

#include "sl2/commands.hpp"

int main(int argc, char** argv) {
  const auto res = sl2::run_command({argv + 1, argv + argc});
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}
