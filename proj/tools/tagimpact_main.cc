#include <iostream>

#include "tagimpact/cli.h"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tagimpact::run_cli(args, std::cout, std::cerr);
}
