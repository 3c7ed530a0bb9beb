#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace noderank::cli {

/// Runs the command line `args` (without the program name). Returns the
/// process exit status: 0 success, 1 usage error, 2 data error,
/// 3 numerical failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace noderank::cli
