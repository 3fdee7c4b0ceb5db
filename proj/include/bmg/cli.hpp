#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bmg::cli {

// Exit statuses shared by every subcommand.
inline constexpr int kSuccess = 0;
inline constexpr int kRejected = 1;
inline constexpr int kInputError = 2;

// Runs the command line `args` (without the program name). Reports go to
// `out`; diagnostics, warnings and `REJECT <stage> <witness...>` lines go to
// `err`.
int Run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace bmg::cli
