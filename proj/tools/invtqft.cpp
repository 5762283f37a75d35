#include <iostream>
#include <string>
#include <vector>

#include "invtqft/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return invtqft::cli::run(args, std::cout, std::cerr);
}
