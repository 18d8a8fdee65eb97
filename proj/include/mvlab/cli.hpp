#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mvlab {

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). `in` feeds the "-"
/// formula-list argument.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mvlab
