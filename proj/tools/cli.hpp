#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zetakit::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kDomain = 3,
  kNumerical = 4,
};

/// Runs one command. `args` excludes the program name. Nothing is written to
/// `out` unless the command completes; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zetakit::cli
