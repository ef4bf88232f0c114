#include <iostream>

#include "starlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return starlab::run_cli(args, std::cout, std::cerr);
}
