#include <iostream>
#include <string>
#include <vector>

#include "formal_rings/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return formal_rings::cli::run(args, std::cin, std::cout, std::cerr);
}
