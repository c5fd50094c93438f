#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace biprab::cli {

/// Exit codes of `run`.
enum ExitCode : int {
  ok = 0,
  verify_failed = 1,
  domain_error = 2,
  numerical_error = 3,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless --out names a file; diagnostics and log lines go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int main(int argc, char** argv);

}  // namespace biprab::cli
