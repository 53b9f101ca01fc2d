#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hfp::cli {

enum ExitCode : int {
  kOk = 0,
  kObstructed = 1,
  kUsage = 2,
  kInconclusive = 3,
};

/// Runs one command. `args` excludes the program name. Documents go to
/// `out`, diagnostics to `err`; never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hfp::cli
