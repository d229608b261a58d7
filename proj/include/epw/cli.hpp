#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace epw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInvariantViolation = 3;

/// Runs one subcommand. `args` excludes the program name. Reports go to
/// `out` as JSON, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace epw::cli
