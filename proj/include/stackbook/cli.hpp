#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stackbook::cli {

enum ExitCode : int {
  kOk = 0,
  kViolations = 1,
  kUsage = 2,
  kTimeout = 3,
};

/// Runs one command line (without the program name). Primary output goes to
/// `out` (or --output), diagnostics to `err`, and one JSON manifest line per
/// run to `err` (or appended to --log).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace stackbook::cli
