#include <iostream>

#include "etpc/harness/cli.hpp"

int main(int argc, char** argv) {
  return etpc::run_cli(argc, argv, std::cout, std::cerr);
}
