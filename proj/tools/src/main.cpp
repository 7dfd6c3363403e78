#include <iostream>

#include "carc/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return carc::cli::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
