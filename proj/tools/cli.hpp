#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cubicity::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line (args excludes the program name). Normal output goes
/// to `out`, logs and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubicity::cli
