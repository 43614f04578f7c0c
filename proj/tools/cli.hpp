#ifndef ENRIQUES_TOOLS_CLI_HPP
#define ENRIQUES_TOOLS_CLI_HPP

#include <string>
#include <vector>

#include "enriques/io.hpp"

namespace enriques::cli {

enum ExitCode : int {
  kOk = 0,
  kPrecondition = 2,
  kSearchFailure = 3,
  kUsage = 64,
  kInternal = 70,
};

struct CommandResult {
  /// "ok", "precondition-violation", "not-found", "usage-error" or
  /// "internal-error".
  std::string status;
  io::Json payload;
  /// Human readable rendering; when non-empty it is printed instead of the
  /// JSON payload.
  std::string text;
  int exit_code = kOk;
};

/// Runs one command.  `args` excludes the program name.
CommandResult dispatch(const std::vector<std::string>& args);

/// What the executable writes to standard output for a result.
std::string render(const CommandResult& result);

}  // namespace enriques::cli

#endif  // ENRIQUES_TOOLS_CLI_HPP
