#include <iostream>
#include <string>
#include <vector>

#include "bigcross/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return bigcross::run_cli(args, std::cout, std::cerr);
}
