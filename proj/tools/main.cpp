#include <iostream>
#include <string>
#include <vector>

#include "orbitlattice/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return orbitlattice::cli::run(args, std::cout, std::cerr);
}
