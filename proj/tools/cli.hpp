#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weylcyc::cli {

enum ExitCode : int { kPass = 0, kIdentityFailure = 1, kUsage = 2, kCapExceeded = 3 };

// Runs one command line (without the program name). Results go to `out`,
// diagnostics and timing to `err`, so `out` is identical across runs.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylcyc::cli
