#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hiveweb::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kMalformed = 2 };

/// Runs one subcommand. args excludes the program name. The result document
/// goes to out (or --out PATH); diagnostics and usage go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hiveweb::cli
