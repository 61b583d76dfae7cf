#include <iostream>
#include <string>
#include <vector>

#include "yukawa/cli.hpp"

int main(int argc, char** argv) {
  return yukawa::cli::main_entry(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
