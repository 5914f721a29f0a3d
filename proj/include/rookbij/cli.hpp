#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rookbij {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  exit_ok = 0,
  exit_domain_failure = 1,  // pattern present, condition violated, sweep counterexample
  exit_input_error = 2,     // unparsable or invalid board/placement/sequence
};

/// Runs the command line `args` (program name excluded) and returns the
/// process exit code. Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rookbij
