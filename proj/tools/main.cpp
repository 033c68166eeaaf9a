#include <iostream>
#include <string>
#include <vector>

#include "trimat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return trimat::cli::run(args, std::cout, std::cerr);
}
