#include <iostream>

#include "blockfunctor/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return blockfunctor::run(args, std::cout, std::cerr);
}
