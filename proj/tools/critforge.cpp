#include <iostream>

#include "critforge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return critforge::cli::run(args, std::cout, std::cerr);
}
