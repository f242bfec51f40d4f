#include <iostream>
#include <string>
#include <vector>

#include "arcsupport/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return arcsupport::cli::run_cli(args, std::cout, std::cerr);
}
