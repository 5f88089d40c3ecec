#include <iostream>
#include <string>
#include <vector>

#include "lcgroups/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lcg::cli_dispatch(args, std::cout, std::cerr);
}
