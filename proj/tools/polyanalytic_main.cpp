#include <iostream>

#include "polyanalytic/cli.hpp"

int main(int argc, char** argv) {
  return polyanalytic::cli::main_entry(argc, argv, std::cout, std::cerr);
}
