#include <iostream>

#include "peelbc/cli.hpp"

int main(int argc, char** argv) {
  return peelbc::run_cli(argc, argv, std::cout, std::cerr);
}
