#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mlcp {

/// Exit codes of the `mlcp` tool. Query verdicts never change the code.
enum ExitCode : int
{
    exit_ok = 0,
    exit_failure = 1,    ///< bench disagreement, oracle mismatch, bad usage
    exit_parse = 2,
    exit_validation = 3,
    exit_resource = 4,
};

/// Runs one subcommand. `args` excludes the program name.
int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

} // namespace mlcp
