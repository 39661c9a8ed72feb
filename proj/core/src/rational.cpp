#include "qzeta/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qzeta {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(long num, long den)
{
    return make_rational(Integer(num), Integer(den));
}

namespace {

bool all_digits(const std::string& s, std::size_t from)
{
    if (from >= s.size()) return false;
    for (std::size_t i = from; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer parse_integer(const std::string& s)
{
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (!all_digits(s, start)) throw std::invalid_argument("malformed integer: '" + s + "'");
    Integer z;
    z.set_str(s[0] == '+' ? s.substr(1) : s, 10);
    return z;
}

}  // namespace

Rational parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text));
    std::string den = text.substr(slash + 1);
    if (!all_digits(den, 0)) throw std::invalid_argument("malformed denominator: '" + text + "'");
    return make_rational(parse_integer(text.substr(0, slash)), parse_integer(den));
}

std::string to_string(const Rational& r) { return r.get_str(10); }

std::pair<std::string, std::string> to_string_pair(const Rational& r)
{
    return {r.get_num().get_str(10), r.get_den().get_str(10)};
}

Rational from_string_pair(const std::string& num, const std::string& den)
{
    Integer d = parse_integer(den);
    if (d <= 0) throw std::invalid_argument("denominator must be positive");
    return make_rational(parse_integer(num), d);
}

Rational factorial(unsigned n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

}  // namespace qzeta
