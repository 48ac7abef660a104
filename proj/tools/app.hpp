#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kolak::cli {

/// Runs one CLI invocation. Returns 0 on success, 2 on argument errors, 1 on
/// internal failures. Diagnostics go to err only.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kolak::cli
