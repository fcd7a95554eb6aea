#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pendlab::cli {

// Process exit codes.
inline constexpr int kExitVerified = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitInsufficientRange = 2;
inline constexpr int kExitUsage = 3;
inline constexpr int kExitFailure = 4;

// Runs one command line (without the program name). Normal output goes to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pendlab::cli
