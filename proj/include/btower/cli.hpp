#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace btower {

/// Runs one btower command.  args excludes the program name.  Returns the
/// process exit code: 0 success, 1 verification failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace btower
