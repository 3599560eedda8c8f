#include <iostream>
#include <string>
#include <vector>

#include "conjzoo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return conjzoo::run_cli(args, std::cout, std::cerr);
}
