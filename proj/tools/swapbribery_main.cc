#include <iostream>
#include <string>
#include <vector>

#include "swapbribery/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return swapbribery::run_cli(args, std::cout, std::cerr);
}
