#include <iostream>

#include "agcolor/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return agcolor::cli::run(args, std::cout, std::cerr);
}
