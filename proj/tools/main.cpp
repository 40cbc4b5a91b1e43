#include <iostream>
#include <string>
#include <vector>

#include "hyperfuzzy/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hyperfuzzy::run_cli(args, std::cout, std::cerr);
}
