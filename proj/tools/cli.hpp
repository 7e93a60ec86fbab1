#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sset::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;     // a mathematical property does not hold
inline constexpr int kInputError = 2;  // bad input, or truncation too small
inline constexpr int kResourceCap = 3;

// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sset::cli
