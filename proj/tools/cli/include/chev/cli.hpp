#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace chev::cli {

inline constexpr const char* kToolName = "chevtool";
inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs one subcommand; `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// CHEVTOOL_SEED when set to a valid integer, otherwise 1.
std::uint64_t default_seed();

}  // namespace chev::cli
