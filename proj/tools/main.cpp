#include <iostream>
#include <string>
#include <vector>

#include "rookbij/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rookbij::run_cli(args, std::cout, std::cerr);
}
