#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace butson::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalid = 1,
  kUsage = 2,
  kPrecondition = 3,
};

/// Runs one command line (without the program name). Matrix data and
/// reports go to `out`, diagnostics to `err`; the file name "-" reads `in`.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace butson::cli
