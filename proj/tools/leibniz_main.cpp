#include <iostream>

#include "leibniz/cli.hpp"

int main(int argc, char** argv) {
  return leibniz::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
