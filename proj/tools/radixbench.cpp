#include <iostream>

#include "radixbench/cli.hpp"

int main(int argc, char** argv) {
  return radixbench::cli::run(argc, argv, std::cout, std::cerr);
}
