#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toughlab::cli {

// Exit codes: 0 success, 1 theorem discrepancy or decider disagreement,
// 2 malformed input or usage error.
inline constexpr int kOk = 0;
inline constexpr int kDiscrepancy = 1;
inline constexpr int kBadInput = 2;

// Runs the command line `args` (without the program name). Graph input is
// read from `in` unless --input or --family names another source.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace toughlab::cli
