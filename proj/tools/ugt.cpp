#include <iostream>
#include <string>
#include <vector>

#include "ugt/cli/run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ugt::cli::run(args, std::cin, std::cout, std::cerr);
}
