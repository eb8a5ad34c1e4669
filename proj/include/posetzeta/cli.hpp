#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pz::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
};

/// Runs one command line (args excludes the program name). Structured output
/// goes to `out` as JSON or plain values, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pz::cli
