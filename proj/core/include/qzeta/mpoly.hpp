#pragma once

#include "qzeta/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qzeta {

class SymbolTable {
public:
    static constexpr std::size_t max_arity = 8;

    explicit SymbolTable(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index(const std::string& name) const;

    bool operator==(const SymbolTable& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

SymbolTablePtr make_symbol_table(std::vector<std::string> names);

// Exponent vector packed one byte per symbol, symbol 0 in the most significant
// byte, so integer comparison of equal-degree monomials is lexicographic.
using Monomial = std::uint64_t;

unsigned monomial_exponent(Monomial m, std::size_t symbol);
unsigned monomial_degree(Monomial m);
Monomial monomial_mul(Monomial a, Monomial b);
Monomial make_monomial(const std::vector<unsigned>& exps);
std::vector<unsigned> monomial_exponents(Monomial m, std::size_t arity);

// Graded lexicographic order; true when a sorts before b (higher first).
bool monomial_before(Monomial a, Monomial b);

// Multivariate polynomial with rational coefficients over a symbol table.
// Invariants: no zero coefficients; terms strictly sorted by monomial_before;
// a null table is allowed only while every stored monomial is constant.
class MPoly {
public:
    using Term = std::pair<Monomial, Rational>;

    MPoly() = default;
    MPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    MPoly(long c) : MPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    MPoly(SymbolTablePtr table, std::vector<Term> terms);

    static MPoly symbol(const SymbolTablePtr& table, const std::string& name);
    static MPoly monomial(const SymbolTablePtr& table, Monomial m, const Rational& c);

    const SymbolTablePtr& table() const { return table_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coefficient(Monomial m) const;
    unsigned degree() const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly& operator*=(const Rational& c);
    MPoly operator-() const;

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
    friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
    friend MPoly operator*(MPoly a, long c) { return a *= Rational(c); }
    friend MPoly operator*(long c, MPoly a) { return a *= Rational(c); }
    friend bool operator==(const MPoly& a, const MPoly& b);
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    // Adds c * m without normalising the whole polynomial.
    void add_term(Monomial m, const Rational& c);

    // Throws std::invalid_argument naming the first symbol missing from the assignment.
    Rational eval(const std::map<std::string, Rational>& assignment) const;

    // Substitutes values for a subset of symbols; the rest stay symbolic.
    MPoly substitute(const std::map<std::string, Rational>& values) const;

    std::string to_string() const;

private:
    void adopt_table(const SymbolTablePtr& other);

    SymbolTablePtr table_;
    std::vector<Term> terms_;
};

std::string monomial_to_string(const SymbolTablePtr& table, Monomial m);

// Inverse of a coefficient; MPoly inverses exist only for nonzero constants.
Rational invert_coeff(const Rational& c);
MPoly invert_coeff(const MPoly& c);

inline bool coeff_is_zero(const Rational& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const MPoly& c) { return c.is_zero(); }

}  // namespace qzeta
