#include <iostream>
#include <string>
#include <vector>

#include "varpde/experiments.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return varpde::run_cli(args, std::cout, std::cerr);
}
