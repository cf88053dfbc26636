#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace arrfiber {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

// Runs the tool on `args` (without the program name). Subcommands:
// invariants, graph, local, verify, catalog.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arrfiber
