#pragma once

#include <string>
#include <vector>

namespace ulrich::cli {

// Executes one invocation. Exit code 0: success / all checks pass,
// 1: a verification suite found a mismatch, 2: usage or input error.
int run(const std::vector<std::string>& args);

} // namespace ulrich::cli
