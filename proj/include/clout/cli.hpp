#pragma once

#include <string>
#include <vector>

namespace clout {

// Command-line driver. Exit codes: 0 success, 1 bad input or usage, 2 a
// certification or verification failed. Writes artifacts under
// CLOUT_OUT_DIR when that variable is set and a path is relative.
int run_cli(const std::vector<std::string>& args);

}  // namespace clout
