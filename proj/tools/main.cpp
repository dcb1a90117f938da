#include <iostream>

#include "kcontact/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kcontact::run_cli(args, std::cout, std::cerr);
}
