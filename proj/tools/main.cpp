#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const enriques::cli::CommandResult result = enriques::cli::dispatch(args);
  std::cout << enriques::cli::render(result);
  return result.exit_code;
}
