#include <iostream>
#include <string>
#include <vector>

#include "colorlie/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return colorlie::cli::run(args, std::cout, std::cerr);
}
