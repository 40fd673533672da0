#include <iostream>
#include <string>
#include <vector>

#include "absum/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return absum::cli::run(args, std::cout, std::cerr);
}
