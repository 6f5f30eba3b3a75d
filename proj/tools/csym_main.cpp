#include <iostream>

#include "csym/cli.hpp"

int main(int argc, char** argv) {
  return csym::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
