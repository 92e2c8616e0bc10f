#ifndef NDGA_TOOLS_CLI_HPP
#define NDGA_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ndga::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    ok = 0,
    math_failure = 1, // an axiom fails or a residual is nonzero
    input_error = 2,  // usage, parse or precondition problems
    invariant_breach = 3,
};

/// Runs one invocation. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ndga::cli

#endif // NDGA_TOOLS_CLI_HPP
