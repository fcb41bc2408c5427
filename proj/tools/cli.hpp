#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sdist::cli {

enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kUsage = 2, kInputData = 3 };

// Runs one invocation. `args` excludes the program name. Results go to `out`,
// diagnostics to `err`; `in` backs the `-` file name.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sdist::cli
