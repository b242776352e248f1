#pragma once

#include <ostream>

namespace blaschke_lab::cli {

enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitNumeric = 3, kExitIo = 4 };

/// The whole command line program. Never throws; every failure becomes an
/// exit code with a message on err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace blaschke_lab::cli
