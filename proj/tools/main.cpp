#include <iostream>
#include <string>
#include <vector>

#include "vrmenu/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return vrmenu::cli::run(args, std::cout, std::cerr);
}
