#include <iostream>
#include <string>
#include <vector>

#include "ipword/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ipword::run_cli(args, std::cout, std::cerr);
}
