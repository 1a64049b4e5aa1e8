#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace engelkit::cli {

// Runs the command line against the given streams. Exit codes: 0 success or
// affirmative result, 1 negative result, 2 usage error, 3 internal
// invariant violation.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace engelkit::cli
