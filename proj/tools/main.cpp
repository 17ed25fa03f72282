#include <iostream>

#include "filtint/cli.hpp"

int main(int argc, char** argv) {
  return filtint::run_cli(argc, argv, std::cout, std::cerr);
}
