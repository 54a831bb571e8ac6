#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tauq::cli {

/// Exit statuses. Analysis verdicts, positive or negative, are data and
/// exit with `ok`.
enum Exit : int { ok = 0, input_error = 2, internal_error = 3 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tauq::cli
