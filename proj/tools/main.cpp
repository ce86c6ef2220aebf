#include <iostream>

#include "reactor/cli.hpp"

int main(int argc, char** argv) {
  return reactor::run_cli({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
