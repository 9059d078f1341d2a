#include <iostream>

#include "hi028/cli.hpp"

int main(int argc, char** argv) {
  return hi028::cli::run(argc, argv, std::cout, std::cerr);
}
