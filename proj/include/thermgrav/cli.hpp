#pragma once

#include <ostream>

namespace thermgrav::cli {

inline constexpr int exit_success = 0;
inline constexpr int exit_failure = 1;  // validation, domain or I/O failure
inline constexpr int exit_usage = 2;

/// Entry point for the command-line tool. Writes command output to `out`
/// (unless --out names a file) and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace thermgrav::cli
