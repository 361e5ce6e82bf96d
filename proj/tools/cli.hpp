#pragma once

#include <iosfwd>

namespace hullsum::cli {

/// Exit codes: 0 success or satisfied, 1 violation found, 2 usage or input error.
enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2 };

/// Runs the command line in-process; `out` receives results and `err` messages.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hullsum::cli
