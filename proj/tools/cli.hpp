#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace srkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// Runs one `srkit` invocation. `args` excludes the program name.
/// Exit codes: 0 computed, 1 a checked property fails, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace srkit::cli
