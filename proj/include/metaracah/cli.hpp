#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace metaracah {

/// Process exit codes of the command-line front end.
enum ExitCode : int {
  kExitPass = 0,
  kExitFail = 1,
  kExitDegenerate = 2,
  kExitUsage = 3,
};

/// Entry point for the `metaracah` tool with explicit streams, so tests can
/// drive it in-process. Subcommands: verify, table, matrix.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace metaracah
