#include <iostream>
#include <string>
#include <vector>

#include "gdd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gdd::cli::run(args, std::cin, std::cout, std::cerr);
}
