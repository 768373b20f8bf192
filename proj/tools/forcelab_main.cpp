#include <iostream>

#include "forcelab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return forcelab::dispatch(args, std::cin, std::cout, std::cerr);
}
