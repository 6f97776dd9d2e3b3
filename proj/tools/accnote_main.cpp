#include <iostream>
#include <string>
#include <vector>

#include "accnote/cli/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return accnote::cli::run_cli(args, std::cout, std::cerr);
}
