#include <vector>

#include "sqvis/cli.hpp"

int main(int argc, char** argv) {
  return sqvis::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
