#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ionqft::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntimeError = 1;
inline constexpr int kExitUsageError = 2;

// Runs one invocation. `args` excludes the program name. Artifacts go to
// `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ionqft::cli
