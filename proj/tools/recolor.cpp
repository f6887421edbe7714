#include <iostream>
#include <string>
#include <vector>

#include "recolor/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return recolor::cli::run(args, std::cout, std::cerr);
}
