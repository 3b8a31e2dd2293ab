#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace novikov::cli {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable supplying the default --seed.
inline constexpr const char* kSeedEnv = "NOVIKOV_SEED";

/// Runs one command line (args[0] is the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace novikov::cli
