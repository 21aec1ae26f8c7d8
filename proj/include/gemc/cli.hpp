#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gemc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInternalError = 2;

/// Runs one command line (without the program name). Data goes to `out` or
/// to the file named by --output; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gemc::cli
