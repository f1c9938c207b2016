#include <iostream>
#include <string>
#include <vector>

#include "alexsnn/cli.hpp"

int main(int argc, char** argv) {
  return alexsnn::cli::main(std::vector<std::string>(argv + 1, argv + argc), std::cout,
                            std::cerr);
}
