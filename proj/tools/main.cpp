#include <iostream>
#include <string>
#include <vector>

#include "divdeg/cli.hpp"

int main(int argc, char** argv) {
  using namespace divdeg::cli;
  const std::vector<std::string> args(argv, argv + argc);
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const HelpRequested& help) {
    std::cout << help.what();
    return kExitOk;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\nRun with --help for the list of flags.\n";
    return kExitUsage;
  }
  return run(config, std::cout, std::cerr);
}
