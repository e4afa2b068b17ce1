#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vmodel::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kError = 2;

// Runs one command line (without the program name) and returns its exit
// code. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace vmodel::cli
