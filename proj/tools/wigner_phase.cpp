#include <iostream>
#include <string>
#include <vector>

#include "wphase/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wphase::run_cli(args, std::cout, std::cerr);
}
