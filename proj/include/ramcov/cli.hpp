#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramcov::cli {

inline constexpr int exit_success = 0;
inline constexpr int exit_math_failure = 1;
inline constexpr int exit_input_error = 2;

/// Runs one command line (without the program name). The report goes to
/// `out`, errors to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ramcov::cli
