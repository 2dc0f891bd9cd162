#include <iostream>

#include "lazard/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lazard::run(args, std::cout, std::cerr);
}
