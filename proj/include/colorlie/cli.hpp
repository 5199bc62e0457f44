#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace colorlie::cli {

/// Runs one CLI invocation. Exit codes: 0 success/valid, 1 mathematical
/// failure (defects found), 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace colorlie::cli
