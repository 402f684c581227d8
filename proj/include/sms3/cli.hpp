#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sms3 {

// Runs one CLI invocation (args without the program name).  Writes results to
// out and diagnostics to err; returns the process exit code (0 success,
// 1 domain error, 2 usage error).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sms3
