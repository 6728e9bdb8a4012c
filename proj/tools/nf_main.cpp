#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "cli/command.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return nf::cli::main_entry(args, std::getenv("NF_CHART_BUDGET"), std::cout, std::cerr);
}
