#include <iostream>
#include <string>
#include <vector>

#include "spinor_disc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return spinor_disc::cli::run(args, std::cout, std::cerr);
}
