#pragma once

#include <iosfwd>

namespace kabar {

/// Exit codes of the command line tool.
enum ExitCode : int { kExitOk = 0, kExitIo = 1, kExitInvalid = 2, kExitInvariant = 3 };

/// Runs the command line tool. The partition goes to --out or, without it,
/// to `out`; diagnostics and the usage text go to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kabar
