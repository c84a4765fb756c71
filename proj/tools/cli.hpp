#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace connspec::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsageError = 2 };

/// Parses argv (argv[0] is the program name) and runs one verb.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace connspec::cli
