#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramsey::cli {

// Runs one CLI invocation. Exit status: 0 on success, 1 on domain errors
// (precondition violations, unreadable inputs), 2 on usage errors.
int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ramsey::cli
