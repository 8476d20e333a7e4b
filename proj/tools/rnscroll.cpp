#include <iostream>

#include "rns/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return rns::cli::run(args, std::cout, std::cerr);
}
