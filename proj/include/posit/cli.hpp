#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace posit::cli {

// Runs the tool with the given arguments (excluding argv[0]).
// Exit codes: 0 success, 1 verification/check failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace posit::cli
