#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qzeta::cli {

// Exit codes: 0 success, 1 a check or decomposition failed, 2 usage, parse
// or evaluation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qzeta::cli
