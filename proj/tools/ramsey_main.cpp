#include <iostream>
#include <string>
#include <vector>

#include "ramsey/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ramsey::cli::run(std::move(args), std::cin, std::cout, std::cerr);
}
