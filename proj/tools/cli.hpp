#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polyjoin::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kPrecondition = 3;
inline constexpr int kDomain = 4;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyjoin::cli
