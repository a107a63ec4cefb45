#pragma once

#include <iosfwd>

namespace htube::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kNumerical = 3 };

/// Entry point of the htube tool; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace htube::cli
