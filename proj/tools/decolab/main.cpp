#include <iostream>

#include "decolab/commands.hpp"

int main(int argc, char** argv) {
  return decolab::cli::run(argc, argv, std::cout, std::cerr);
}
