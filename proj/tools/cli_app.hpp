#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rolecheck::cli {

// Runs one command (argv without the program name) against the given
// streams. Returns the process exit status: 0 success / formula true at the
// initial state, 1 formula false at the initial state, 2 usage or input
// error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rolecheck::cli
