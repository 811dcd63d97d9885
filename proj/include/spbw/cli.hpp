#ifndef SPBW_CLI_HPP
#define SPBW_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace spbw {

/// Exit codes of the spbw tool.
enum ExitCode : int { exit_ok = 0, exit_check_failed = 1, exit_input_error = 2 };

/// Runs the command line `args` (without the program name), writing reports
/// to `out` and diagnostics to `err`. Returns one of the ExitCode values.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spbw

#endif  // SPBW_CLI_HPP
