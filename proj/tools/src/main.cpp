#include "frobtool/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return frob::cli::run_command(args, std::cout, std::cerr);
}
