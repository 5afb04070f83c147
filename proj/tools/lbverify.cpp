#include <iostream>
#include <string>
#include <vector>

#include "lbverify/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lb::cli::run(args, std::cout, std::cerr);
}
