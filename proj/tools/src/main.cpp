#include <iostream>
#include <string>
#include <vector>

#include "amc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return amc::cli::run(args, std::cout, std::cerr);
}
