#include <iostream>
#include <string>
#include <vector>

#include "euler3d/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return euler3d::run_cli(args, std::cout, std::cerr);
}
