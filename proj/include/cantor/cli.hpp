#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cantor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

/// Runs one subcommand. `args` excludes the program name, e.g.
/// {"expand", "--spec", "odd", "--x", "1/4", "--count", "8"}.
///
/// Results go to `out`, one per line; diagnostics go to `err`. Returns 1 for
/// usage errors (the message names the flag) and 2 for domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cantor::cli
