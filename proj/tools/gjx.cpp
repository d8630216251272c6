#include <iostream>

#include "gjx/cli.hpp"

int main(int argc, char** argv) {
  return gjx::cli::run(argc, argv, gjx::cli::Io{std::cin, std::cout, std::cerr});
}
