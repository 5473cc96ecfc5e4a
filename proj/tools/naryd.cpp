#include <unistd.h>

#include <cstdlib>
#include <iostream>

#include "naryd/cli.hpp"

int main(int argc, char** argv) {
  const bool color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
  return naryd::run_cli({argv + 1, argv + argc}, std::cout, std::cerr, color);
}
