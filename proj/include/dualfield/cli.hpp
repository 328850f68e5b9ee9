#pragma once

// Command-line front end. Exit codes: 0 all checks pass, 1 a check failed,
// 2 usage error or unknown subcommand, 3 bad configuration.

#include <iosfwd>

namespace dualfield::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2, kBadConfig = 3 };

int run(int argc, char** argv);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace dualfield::cli
