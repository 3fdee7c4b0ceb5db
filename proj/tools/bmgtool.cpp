#include "bmg/cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bmg::cli::Run(args, std::cout, std::cerr);
}
