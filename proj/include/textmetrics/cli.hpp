#pragma once

#include <string>
#include <vector>

namespace textmetrics {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `textmetrics` tool (subcommands `analyze` and
/// `filter`). Diagnostics go to stderr.
int cli_main(int argc, const char* const* argv);

/// Same, with the arguments after the program name.
int cli_main(const std::vector<std::string>& args);

}  // namespace textmetrics
