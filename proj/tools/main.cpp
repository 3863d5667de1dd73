#include <string>
#include <vector>

#include "sqbasis/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sqbasis::runCli(args, argv[0]);
}
