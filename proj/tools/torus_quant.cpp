#include <iostream>

#include "torusq/cli/app.hpp"

int main(int argc, char** argv) {
  return torusq::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
