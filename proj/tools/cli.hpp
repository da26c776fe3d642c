#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mcm::cli {

/// Runs the command line `args` (program name excluded). Returns 0 when every requested
/// check passes, 1 on a failed check, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcm::cli
