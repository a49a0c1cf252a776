#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace dthresh::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kDisagreement = 2;

// Runs the command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Splits a comma-separated factor list. Tokens made only of digits continue
// the previous family spec, so "biclique:2,3,path:4" is two factors.
std::vector<std::string> split_factor_list(std::string_view text);

}  // namespace dthresh::cli
