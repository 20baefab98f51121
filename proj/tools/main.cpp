#include <iostream>

#include "lcalc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lcalc::run_cli(args, std::cout, std::cerr);
}
