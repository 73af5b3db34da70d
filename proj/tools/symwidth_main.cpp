#include <iostream>
#include <string>
#include <vector>

#include "symwidth/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return symwidth::cli::run(args, std::cout, std::cerr).exit_code;
}
