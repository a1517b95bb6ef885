#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sepgraph {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,       ///< bad flags, unreadable input, graph6 parse errors
  kExitAuditFailure = 3,
  kExitCapExceeded = 4, ///< only with --strict
};

/// Runs one command line (without the program name). `in` backs the "-"
/// input path.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace sepgraph
