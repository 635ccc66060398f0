#include <iostream>

#include "widths/cli.hpp"

int main(int argc, char** argv) {
  return widths::run_cli(argc, argv, std::cout, std::cerr);
}
