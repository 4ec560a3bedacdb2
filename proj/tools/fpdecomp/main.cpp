#include <iostream>
#include <string>
#include <vector>

#include "fpd/cli/run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fpd::cli::run(args, std::cin, std::cout, std::cerr);
}
