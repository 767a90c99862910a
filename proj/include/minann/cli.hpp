#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minann {

inline constexpr const char* kToolName = "minann";
inline constexpr const char* kToolVersion = "0.1.0";

// Runs one CLI invocation (args exclude the program name) and returns the
// process exit code: 0 when every reported check passes, 1 when a check
// fails, 2 on input errors. Output is byte-deterministic for identical
// arguments.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minann
