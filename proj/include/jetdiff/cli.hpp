#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jetdiff::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitComputation = 2;

/// Environment variable overriding the default --max-terms ceiling.
inline constexpr const char* kMaxTermsEnv = "JETDIFF_MAX_TERMS";

/// Runs the command line `args` (without the program name). Returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jetdiff::cli
