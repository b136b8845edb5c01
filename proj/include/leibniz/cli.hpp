#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace leibniz {

enum ExitCode : int {
  kExitOk = 0,
  kExitMathFailure = 1,
  kExitInputError = 2,
  kExitGuard = 3,
};

inline constexpr unsigned long long kDefaultSeed = 42;
/// Overrides kDefaultSeed when set to a nonnegative integer.
inline constexpr const char* kSeedEnvVar = "LEIBNIZ_SEED";

/// Runs one command line (args excludes the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leibniz
