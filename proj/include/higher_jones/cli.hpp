#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hj {

enum ExitCode { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2 };

// args excludes the program name. Nothing reaches `out` unless the command
// succeeded or produced a verification report.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hj
