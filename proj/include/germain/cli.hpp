#pragma once

// Command-line surface. Every library operation is reachable through a
// subcommand, with text, JSON, and CSV output. run() is the whole
// interface so the binary stays a thin wrapper and tests can drive the
// CLI in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace germain::cli {

// Dispatches the argument list (program name excluded) to a subcommand.
// Results go to `out`, diagnostics to `err`.
//
// Exit codes: 0 success, 2 invalid arguments, 3 arithmetic guard tripped
// (overflow, out-of-range, or an exhausted witness search).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace germain::cli
