#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gdd::cli {

enum ExitCode : int {
  kOk = 0,
  kUnsupported = 1,  // structural method does not apply, or graph too large
  kMalformed = 2,    // bad arguments, edge list, or sequence
  kMismatch = 3,     // crosscheck found a disagreement
};

/// Runs one command line (without the program name). Input graphs are read
/// from the positional path, or from `in` when the path is absent or "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gdd::cli
