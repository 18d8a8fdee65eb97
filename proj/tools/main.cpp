#include <iostream>

#include "mvlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mvlab::run_cli(args, std::cin, std::cout, std::cerr);
}
