#include <iostream>  // for cout, cerr

#include "mckay/cli.hpp"

int main(int argc, char** argv) {
  return mckay::main_cli(argc, argv, std::cout, std::cerr);
}
