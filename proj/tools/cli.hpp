#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permsieve::cli {

enum ExitCode : int { kSuccess = 0, kVerdictFailure = 1, kUsageError = 2 };

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace permsieve::cli
