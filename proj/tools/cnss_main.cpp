#include <iostream>
#include <string>
#include <vector>

#include "cnss/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cnss::run_command(args, std::cout, std::cerr);
}
