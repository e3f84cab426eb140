#include "heckecells/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return heckecells::run_command_line(args, std::cout, std::cerr);
}
