#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "comb/error.hpp"

namespace comb::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kSyntax = 1;
inline constexpr int kType = 2;
inline constexpr int kUnequal = 3;
inline constexpr int kUnsupported = 4;
inline constexpr int kUsage = 5;

int exit_code(ErrorKind kind);

// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace comb::cli
