#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyhull::cli {

/// Runs the command line given as argv-style tokens (program name excluded).
/// Returns the process exit status: 0 success, 1 verification disagreement,
/// 2 usage or input error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cyhull::cli
