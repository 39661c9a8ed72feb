#pragma once

#include "qzeta/series.hpp"

#include <string>

namespace qzeta {

// {"var":"q","order":N,"coeffs":[["num","den"],...]}
std::string to_json(const RSeries& s);
// {"var":"q","order":N,"symbols":[...],"coeffs":[[{"coef":["num","den"],"exps":[...]},...],...]}
std::string to_json(const PSeries& s);

// Throws std::invalid_argument on malformed documents.
RSeries rseries_from_json(const std::string& text);
PSeries pseries_from_json(const std::string& text);

}  // namespace qzeta
