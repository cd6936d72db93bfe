#include <iostream>
#include <string>
#include <vector>

#include "lipscomb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lipscomb::run_cli(args, std::cout, std::cerr);
}
