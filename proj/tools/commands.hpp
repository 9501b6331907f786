#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace delaycode::cli {

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 semantic failure, 2 parse failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace delaycode::cli
