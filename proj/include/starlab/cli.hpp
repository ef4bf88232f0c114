#pragma once

// The `starlab` command line. Exit codes: 0 holds / ok, 1 relation fails or
// inverse does not exist, 2 bad input, 3 invariant violation.

#include <iosfwd>
#include <string>
#include <vector>

namespace starlab {

enum ExitCode : int { kExitOk = 0, kExitFails = 1, kExitInput = 2, kExitInvariant = 3 };

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace starlab
