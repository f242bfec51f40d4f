#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arcsupport::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitValidation = 2,
  kExitBadDelta = 3,
  kExitIo = 4,
  kExitGeneration = 5,
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Subcommands: analyze, find-pair, render, fuzz.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arcsupport::cli
