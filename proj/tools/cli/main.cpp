#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  int exit_code = 0;
  const auto config = jtemporal::cli::parse_args(argc, argv, exit_code);
  if (!config) return exit_code;
  return jtemporal::cli::run(*config, std::cin, std::cout, std::cerr);
}
