#include "qzeta/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qzeta {

SymbolTable::SymbolTable(std::vector<std::string> names) : names_(std::move(names))
{
    if (names_.size() > max_arity) throw std::invalid_argument("symbol table exceeds maximum arity");
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j]) throw std::invalid_argument("duplicate symbol '" + names_[i] + "'");
}

std::optional<std::size_t> SymbolTable::index(const std::string& name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

SymbolTablePtr make_symbol_table(std::vector<std::string> names)
{
    return std::make_shared<const SymbolTable>(std::move(names));
}

namespace {

constexpr unsigned shift_of(std::size_t symbol) { return static_cast<unsigned>(8 * (7 - symbol)); }

}  // namespace

unsigned monomial_exponent(Monomial m, std::size_t symbol)
{
    return static_cast<unsigned>((m >> shift_of(symbol)) & 0xffu);
}

unsigned monomial_degree(Monomial m)
{
    unsigned d = 0;
    for (std::size_t i = 0; i < 8; ++i) d += monomial_exponent(m, i);
    return d;
}

Monomial monomial_mul(Monomial a, Monomial b)
{
    Monomial r = 0;
    for (std::size_t i = 0; i < 8; ++i) {
        unsigned e = monomial_exponent(a, i) + monomial_exponent(b, i);
        if (e > 0xffu) throw std::overflow_error("monomial exponent overflow");
        r |= static_cast<Monomial>(e) << shift_of(i);
    }
    return r;
}

Monomial make_monomial(const std::vector<unsigned>& exps)
{
    if (exps.size() > SymbolTable::max_arity) throw std::invalid_argument("exponent vector too long");
    Monomial r = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] > 0xffu) throw std::overflow_error("monomial exponent overflow");
        r |= static_cast<Monomial>(exps[i]) << shift_of(i);
    }
    return r;
}

std::vector<unsigned> monomial_exponents(Monomial m, std::size_t arity)
{
    std::vector<unsigned> e(arity);
    for (std::size_t i = 0; i < arity; ++i) e[i] = monomial_exponent(m, i);
    return e;
}

bool monomial_before(Monomial a, Monomial b)
{
    unsigned da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da > db;
    return a > b;
}

MPoly::MPoly(const Rational& c)
{
    if (sgn(c) != 0) terms_.emplace_back(0, c);
}

MPoly::MPoly(SymbolTablePtr table, std::vector<Term> terms) : table_(std::move(table))
{
    for (auto& [m, c] : terms) add_term(m, c);
}

MPoly MPoly::symbol(const SymbolTablePtr& table, const std::string& name)
{
    auto idx = table ? table->index(name) : std::nullopt;
    if (!idx) throw std::invalid_argument("unknown symbol '" + name + "'");
    std::vector<unsigned> e(table->size(), 0);
    e[*idx] = 1;
    return monomial(table, make_monomial(e), 1);
}

MPoly MPoly::monomial(const SymbolTablePtr& table, Monomial m, const Rational& c)
{
    MPoly p;
    p.table_ = table;
    p.add_term(m, c);
    return p;
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

Rational MPoly::constant_term() const { return coefficient(0); }

Rational MPoly::coefficient(Monomial m) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, Monomial x) { return monomial_before(t.first, x); });
    if (it != terms_.end() && it->first == m) return it->second;
    return 0;
}

unsigned MPoly::degree() const { return terms_.empty() ? 0 : monomial_degree(terms_.front().first); }

void MPoly::adopt_table(const SymbolTablePtr& other)
{
    if (!other || other == table_) return;
    if (!table_) {
        table_ = other;
        return;
    }
    if (!(*table_ == *other)) throw std::invalid_argument("polynomials over different symbol tables");
}

void MPoly::add_term(Monomial m, const Rational& c)
{
    if (sgn(c) == 0) return;
    if (m != 0 && !table_) throw std::invalid_argument("non-constant monomial without a symbol table");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, Monomial x) { return monomial_before(t.first, x); });
    if (it != terms_.end() && it->first == m) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    } else {
        terms_.insert(it, Term{m, c});
    }
}

MPoly& MPoly::operator+=(const MPoly& o)
{
    adopt_table(o.table_);
    if (o.terms_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && monomial_before(a->first, b->first))) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || monomial_before(b->first, a->first)) {
            out.push_back(*b++);
        } else {
            Rational s = a->second + b->second;
            if (sgn(s) != 0) out.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly MPoly::operator-() const
{
    MPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

MPoly& MPoly::operator*=(const Rational& c)
{
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

MPoly& MPoly::operator*=(const MPoly& o)
{
    *this = *this * o;
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b)
{
    MPoly r;
    r.table_ = a.table_;
    r.adopt_table(b.table_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    if (b.is_constant()) {
        r.terms_ = a.terms_;
        return r *= b.terms_[0].second;
    }
    if (a.is_constant()) {
        r.terms_ = b.terms_;
        return r *= a.terms_[0].second;
    }
    std::map<Monomial, Rational> acc;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) acc[monomial_mul(ma, mb)] += ca * cb;
    for (auto& [m, c] : acc)
        if (sgn(c) != 0) r.terms_.emplace_back(m, std::move(c));
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const MPoly::Term& x, const MPoly::Term& y) { return monomial_before(x.first, y.first); });
    return r;
}

bool operator==(const MPoly& a, const MPoly& b)
{
    if (a.terms_ != b.terms_) return false;
    if (a.is_constant() || !a.table_ || !b.table_) return true;
    return *a.table_ == *b.table_;
}

Rational MPoly::eval(const std::map<std::string, Rational>& assignment) const
{
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        if (m != 0) {
            for (std::size_t i = 0; i < table_->size(); ++i) {
                unsigned e = monomial_exponent(m, i);
                if (e == 0) continue;
                auto it = assignment.find(table_->name(i));
                if (it == assignment.end())
                    throw std::invalid_argument("missing value for symbol '" + table_->name(i) + "'");
                Rational p = 1;
                for (unsigned k = 0; k < e; ++k) p *= it->second;
                v *= p;
            }
        }
        total += v;
    }
    return total;
}

MPoly MPoly::substitute(const std::map<std::string, Rational>& values) const
{
    MPoly r;
    r.table_ = table_;
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        std::vector<unsigned> e = monomial_exponents(m, table_ ? table_->size() : 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = values.find(table_->name(i));
            if (it == values.end()) continue;
            for (unsigned k = 0; k < e[i]; ++k) v *= it->second;
            e[i] = 0;
        }
        r.add_term(make_monomial(e), v);
    }
    return r;
}

std::string monomial_to_string(const SymbolTablePtr& table, Monomial m)
{
    if (m == 0) return "1";
    std::string s;
    for (std::size_t i = 0; i < table->size(); ++i) {
        unsigned e = monomial_exponent(m, i);
        if (e == 0) continue;
        if (!s.empty()) s += "*";
        s += table->name(i);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::string MPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (m == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << monomial_to_string(table_, m);
        }
    }
    return os.str();
}

Rational invert_coeff(const Rational& c)
{
    if (sgn(c) == 0) throw std::domain_error("division by zero");
    return 1 / c;
}

MPoly invert_coeff(const MPoly& c)
{
    if (!c.is_constant() || c.is_zero()) throw std::domain_error("polynomial coefficient is not invertible");
    MPoly r(1 / c.constant_term());
    return r;
}

}  // namespace qzeta
