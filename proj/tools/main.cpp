#include <iostream>
#include <string>
#include <vector>

#include "novikov/cli.hpp"

int main(int argc, char** argv) {
  return novikov::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
