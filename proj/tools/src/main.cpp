#include <iostream>

#include "mpres_tools/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mpres::tools::run(args, std::cout, std::cerr);
}
