#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace regent::cli {

// Exit statuses.
inline constexpr int kHolds = 0;
inline constexpr int kRefuted = 1;  // also: invalid certificate, failed suite
inline constexpr int kUsage = 2;    // usage, parse and schema errors
inline constexpr int kUnknown = 3;  // search budget exhausted

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace regent::cli
