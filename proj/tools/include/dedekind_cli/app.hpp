#pragma once

#include "dedekind/error.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace dedekind::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitRejected = 2;
inline constexpr int kExitMalformed = 3;
inline constexpr int kExitSearchExhausted = 4;

int exit_code(ErrorKind kind);

// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dedekind::cli
