#include "domgraph/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return domgraph::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
