#include <iostream>
#include <string>
#include <vector>

#include "knotcat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return knotcat::run_cli(args, std::cout, std::cerr);
}
