#pragma once

#include <iosfwd>

namespace kgwell::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kOk = 0, kConfigError = 2, kNumericalError = 3, kIoError = 4, kInternalError = 1 };

/// Parses argv, runs the scenario and writes its files. Nothing is written
/// unless the whole computation succeeds. Messages go to `err`, help and the
/// run summary to `out`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kgwell::cli
