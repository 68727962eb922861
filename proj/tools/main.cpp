#include <iostream>

#include "cli/app.hpp"

int main(int argc, char** argv) {
  return invsg::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cin, std::cout, std::cerr);
}
