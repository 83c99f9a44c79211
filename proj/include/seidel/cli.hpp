#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seidel::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kComputation = 2,
  kViolation = 3,
};

/// Runs one command line (without the program name) against the given streams.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace seidel::cli
