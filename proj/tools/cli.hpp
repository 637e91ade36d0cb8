// Command-line front end. `run` takes the arguments after the program name.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace asymih::cli {

enum ExitCode : int { ok = 0, inconsistent = 1, input_error = 2, unknown_verdict = 3 };

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace asymih::cli
