#include <iostream>

#include "hdakit_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hdakit::cli::run(args, std::cout, std::cerr);
}
