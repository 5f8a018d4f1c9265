#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rav {

enum ExitCode { kExitOk = 0, kExitVerifyFailed = 1, kExitInputError = 2 };

// One raviolo-cli invocation; args exclude the program name. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rav
