#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace skein {

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitVerifyFailed = 2 };

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skein
