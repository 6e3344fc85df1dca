#include <iostream>

#include "ransom/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ransom::run_cli(args, std::cout, std::cerr);
}
