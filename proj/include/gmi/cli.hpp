#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace gmi {

enum ExitCode : int { kExitOk = 0, kExitParse = 2, kExitSemantic = 3, kExitResource = 4 };

/// Runs one command line (without the program name). Standard output is
/// written only when the command succeeds.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gmi
