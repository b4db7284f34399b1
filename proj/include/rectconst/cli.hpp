#pragma once

#include <iosfwd>

namespace rectconst {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,        // bad flags or norm spec
  kExitComputation = 3,  // an operation failed
  kExitViolation = 4,    // verify found a failing invariant
};

// Entry point of the `rectconst` tool: subcommands mu, modulus, ortho,
// segments, ips and verify. Reports go to `out` (or --out), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rectconst
