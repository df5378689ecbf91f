#include <iostream>
#include <string>
#include <vector>

#include "clasp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return clasp::cli::run(args, std::cin, std::cout, std::cerr);
}
