#include <iostream>
#include <string>
#include <vector>

#include "bpa/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return bpa::cli::run(args, std::cout, std::cerr);
}
