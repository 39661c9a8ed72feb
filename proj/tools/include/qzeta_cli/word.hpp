#pragma once

#include "qzeta/operators.hpp"

#include <string>
#include <vector>

namespace qzeta::cli {

// Parses `a[-2,1,1](1X) * a[-1,1](K)/!` into one operator sum per factor.
// Parts are read in the written order; factors whose parts are not
// ascending are rewritten by canonicalize. The `/!` suffix divides by
// lambda!. Throws ParseError (line 1, column of the offending character).
std::vector<OpSum> parse_word(const std::string& text, const SurfaceModel& surface);

}  // namespace qzeta::cli
