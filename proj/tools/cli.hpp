#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace metabelian::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitDomain = 2;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 on parse errors and 2 on
/// domain errors such as non-invariant input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace metabelian::cli
