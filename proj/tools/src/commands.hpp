#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mtg::cli {

enum ExitCode : int { ok = 0, negative = 1, usage = 2 };

/// Runs one invocation. `args` excludes the program name. Logging goes to
/// `err` at the level named by MTG_LOG (default warn).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mtg::cli
