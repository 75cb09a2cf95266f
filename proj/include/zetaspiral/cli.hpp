#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zs::cli {

enum ExitCode : int { kOk = 0, kDomain = 2, kIo = 3, kUsage = 4 };

// Runs the command line (args excludes the program name).  Data goes to
// `out` unless --out names a file; diagnostics go to `err` as one line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

const std::vector<std::string>& figure_ids();

}  // namespace zs::cli
