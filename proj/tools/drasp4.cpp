#include <iostream>
#include <string>
#include <vector>

#include "drasp4/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return drasp4::run(args, std::cout, std::cerr);
}
