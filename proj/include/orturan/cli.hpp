#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace orturan {

// Exit codes of the command-line tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_negative = 1;
inline constexpr int exit_input = 2;
inline constexpr int exit_cap = 3;
inline constexpr int exit_budget = 4;

// Runs the tool on `args` (args[0] is the program name).
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace orturan
