#include <iostream>

#include "cli/dispatch.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return penney::cli::dispatch(args, std::cout, std::cerr);
}
