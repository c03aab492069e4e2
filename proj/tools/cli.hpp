#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cwb {

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitPrecondition = 2, kExitBug = 3 };

// Runs one command line (args excludes the program name). Output goes to `out`, diagnostics to
// `err`; --out redirects `out` to a file.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cwb
