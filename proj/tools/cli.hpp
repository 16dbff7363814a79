#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tp::cli {

// Exit codes: 0 verified / success, 1 refuted, 2 malformed input or
// unsupported request, 3 unknown.
inline constexpr int kOk = 0;
inline constexpr int kRefuted = 1;
inline constexpr int kBadInput = 2;
inline constexpr int kUnknown = 3;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tp::cli
