#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

namespace qzeta {

// Canonical form is maintained by gmpxx for every arithmetic result; values
// built from a raw numerator/denominator pair go through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

// Parses "p" or "p/q" with an optional leading sign. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

// Decimal strings, denominator positive.
std::pair<std::string, std::string> to_string_pair(const Rational& r);
Rational from_string_pair(const std::string& num, const std::string& den);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

Rational factorial(unsigned n);
Integer binomial(long n, long k);

}  // namespace qzeta
