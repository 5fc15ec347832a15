#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mops {

// Command-line entry point without the program name. Exit codes:
// 0 success, 1 a check failed, 2 usage or parameter error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// MOPS_THREADS if set and positive, otherwise the hardware concurrency (at least 1)
int worker_count();

}  // namespace mops
