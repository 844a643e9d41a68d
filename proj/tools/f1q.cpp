#include <iostream>

#include "f1q/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return f1q::run(args, std::cout, std::cerr);
}
