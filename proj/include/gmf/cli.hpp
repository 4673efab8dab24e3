#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gmf {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// Parses args (without the program name), runs one subcommand and writes
/// its report to out; diagnostics go to err. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gmf
