#pragma once

#include <ostream>
#include <span>
#include <string>

namespace qaseries::cli {

// Exit codes of run_command.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,         // bad flags or expression syntax
  kPrecondition = 3,  // FLAT order, non-unit inverse, ...
  kInternal = 4,      // invariant breach inside the library
};

// Runs one command line (without the program name). Results go to out,
// diagnostics to err.
int run_command(std::span<const std::string> args, std::ostream& out,
                std::ostream& err);

}  // namespace qaseries::cli
