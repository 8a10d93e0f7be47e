#include <iostream>

#include "aspic/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return aspic::cli::run(args, std::cout, std::cerr);
}
