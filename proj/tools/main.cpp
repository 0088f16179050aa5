#include <iostream>
#include <string>
#include <vector>

#include "tempconn/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tempconn::run_cli(args, std::cin, std::cout, std::cerr);
}
