#include <iostream>
#include <string>
#include <vector>

#include "modgraph/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return modgraph::run_cli(args, std::cout, std::cerr);
}
