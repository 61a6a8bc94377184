#include <iostream>
#include <string>
#include <vector>

#include "nmweyl/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nmweyl::run(args, std::cout, std::cerr);
}
