#include <iostream>
#include <string>
#include <vector>

#include "mcdm/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return mcdm::cli::run(args, std::cout, std::cerr);
}
