#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oafrac::cli {

// Parses and executes one command line (without the program name), writing
// reports to out and diagnostics to err. Returns the process exit code:
// 0 success (and `verify` with the identity holding), 1 verify failure,
// 2 malformed input, 3 resource limit, 4 internal error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace oafrac::cli
