#include "caj/cli.hpp"

int main(int argc, char** argv) {
  return caj::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
