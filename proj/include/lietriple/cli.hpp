#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lietriple::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kInputError = 2, kInternalError = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lietriple::cli
