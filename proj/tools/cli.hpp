#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace frobwitt {

// Runs the frobwitt command line on the given arguments (excluding argv[0])
// and returns the process exit code:
//   0 = success / all verifications passed
//   1 = a verification failed or an internal invariant broke
//   2 = usage or input parse error
//   3 = enumeration budget exceeded
// All output goes to the supplied streams, so tests can capture it.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frobwitt
