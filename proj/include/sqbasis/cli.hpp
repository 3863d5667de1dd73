#ifndef SQBASIS_CLI_HPP
#define SQBASIS_CLI_HPP

#include <string>
#include <vector>

namespace sqbasis {

/// Runs the command-line tool on `args` (without the program name).
/// `programPath` locates this binary for the self-rerunning checks.
/// Exit codes: 0 success, 1 property failure, 2 usage error.
int runCli(const std::vector<std::string>& args, const std::string& programPath = "");

}  // namespace sqbasis

#endif  // SQBASIS_CLI_HPP
