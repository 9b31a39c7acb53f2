#include <iostream>

#include "kirk/cli.hpp"

int main(int argc, char** argv) {
  return kirk::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
