#ifndef STED_CLI_HPP
#define STED_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace sted::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kInputError = 2,
    kThresholdFail = 3,
    kProviderError = 4,
};

/// Run the CLI with `args` (without argv[0]); reports to `out`, logs to `err`.
/// The binary's main() forwards here so tests can drive the exact same path.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sted::cli

#endif // STED_CLI_HPP
