#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace foliate::cli {

/// Exit codes: 0 definitive success, 1 definitive failure, 2 INCONCLUSIVE, 3 input error.
enum ExitCode : int { Success = 0, Failure = 1, Inconclusive = 2, InputError = 3 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace foliate::cli
