#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trinet::cli {

enum ExitCode : int {
  kSuccess = 0,
  kPropertyFailure = 1,
  kConfigError = 2,
  kDomainError = 3,
  kIoError = 4,
};

/// Runs the command line (without the program name). Results go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace trinet::cli
