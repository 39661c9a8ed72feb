#include "qzeta/surface.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qzeta {

namespace {

void add_vec(std::vector<MPoly>& a, const std::vector<MPoly>& b, bool subtract)
{
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (subtract)
            a[i] -= b[i];
        else
            a[i] += b[i];
    }
}

}  // namespace

bool CohClass::is_zero() const
{
    return c0.is_zero() && c4.is_zero() && std::all_of(c2.begin(), c2.end(), [](const MPoly& p) { return p.is_zero(); });
}

int CohClass::degree() const
{
    bool has0 = !c0.is_zero();
    bool has2 = std::any_of(c2.begin(), c2.end(), [](const MPoly& p) { return !p.is_zero(); });
    bool has4 = !c4.is_zero();
    if (has0 + has2 + has4 != 1) return -1;
    return has0 ? 0 : has2 ? 2 : 4;
}

CohClass& CohClass::operator+=(const CohClass& o)
{
    c0 += o.c0;
    add_vec(c2, o.c2, false);
    c4 += o.c4;
    return *this;
}

CohClass& CohClass::operator-=(const CohClass& o)
{
    c0 -= o.c0;
    add_vec(c2, o.c2, true);
    c4 -= o.c4;
    return *this;
}

CohClass& CohClass::operator*=(const MPoly& c)
{
    c0 *= c;
    for (auto& x : c2) x *= c;
    c4 *= c;
    return *this;
}

bool operator==(const CohClass& a, const CohClass& b)
{
    if (a.c0 != b.c0 || a.c4 != b.c4) return false;
    std::size_t n = std::max(a.c2.size(), b.c2.size());
    for (std::size_t i = 0; i < n; ++i) {
        MPoly x = i < a.c2.size() ? a.c2[i] : MPoly();
        MPoly y = i < b.c2.size() ? b.c2[i] : MPoly();
        if (x != y) return false;
    }
    return true;
}

std::string SurfaceModel::pairing_name(const std::string& a, const std::string& b)
{
    if (a == "K" && b == "K") return "K2";
    if (b == "K") return "K" + a;
    return a + b;
}

SurfaceModel SurfaceModel::projective(std::vector<std::string> divisors, bool K_trivial, std::optional<long> chi)
{
    SurfaceModel s;
    s.kind_ = Kind::Projective;
    s.K_trivial_ = K_trivial;
    s.chi_value_ = chi;
    s.divisors_.push_back("K");
    for (auto& d : divisors) {
        if (d.empty() || d == "K" || d == "e" || d == "pt" || d == "1X")
            throw std::invalid_argument("invalid divisor name '" + d + "'");
        if (std::find(s.divisors_.begin(), s.divisors_.end(), d) != s.divisors_.end())
            throw std::invalid_argument("duplicate divisor '" + d + "'");
        s.divisors_.push_back(std::move(d));
    }
    std::vector<std::string> names;
    if (!chi) names.emplace_back("chi");
    const std::size_t n = s.divisors_.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            if (K_trivial && a == 0) continue;
            names.push_back(pairing_name(s.divisors_[a], s.divisors_[b]));
        }
    if (names.size() > SymbolTable::max_arity) throw std::invalid_argument("too many divisors for the symbol table");
    s.table_ = make_symbol_table(names);
    s.pairing_.assign(n, std::vector<MPoly>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            if (K_trivial && a == 0) continue;
            MPoly p = MPoly::symbol(s.table_, pairing_name(s.divisors_[a], s.divisors_[b]));
            s.pairing_[a][b] = p;
            s.pairing_[b][a] = p;
        }
    return s;
}

SurfaceModel SurfaceModel::equivariant_point()
{
    SurfaceModel s;
    s.kind_ = Kind::EquivariantPoint;
    s.chi_value_ = 1;
    s.table_ = make_symbol_table({});
    return s;
}

MPoly SurfaceModel::chi() const
{
    if (chi_value_) return MPoly(Rational(*chi_value_));
    return MPoly::symbol(table_, "chi");
}

MPoly SurfaceModel::pairing(std::size_t a, std::size_t b) const { return pairing_.at(a).at(b); }

CohClass SurfaceModel::zero() const
{
    CohClass c;
    c.c2.resize(divisors_.size());
    return c;
}

CohClass SurfaceModel::scalar(const MPoly& x) const
{
    CohClass c = zero();
    c.c0 = x;
    return c;
}

CohClass SurfaceModel::canonical() const
{
    if (is_point()) throw std::invalid_argument("the point model has no canonical class");
    CohClass c = zero();
    c.c2[0] = MPoly(1);
    return c;
}

CohClass SurfaceModel::divisor(const std::string& name) const
{
    auto it = std::find(divisors_.begin(), divisors_.end(), name);
    if (it == divisors_.end()) throw std::invalid_argument("unknown divisor '" + name + "'");
    CohClass c = zero();
    c.c2[static_cast<std::size_t>(it - divisors_.begin())] = MPoly(1);
    return c;
}

CohClass SurfaceModel::point() const
{
    if (is_point()) return one();
    CohClass c = zero();
    c.c4 = MPoly(1);
    return c;
}

CohClass SurfaceModel::euler() const
{
    if (is_point()) return one();
    CohClass c = zero();
    c.c4 = chi();
    return c;
}

CohClass SurfaceModel::named(const std::string& name) const
{
    if (name == "1X" || name == "1") return one();
    if (name == "e") return euler();
    if (name == "pt") return point();
    return divisor(name);
}

CohClass SurfaceModel::mul(const CohClass& a, const CohClass& b) const
{
    CohClass r = zero();
    r.c0 = a.c0 * b.c0;
    if (is_point()) return r;
    for (std::size_t i = 0; i < divisors_.size(); ++i) {
        const MPoly x = i < a.c2.size() ? a.c2[i] : MPoly();
        const MPoly y = i < b.c2.size() ? b.c2[i] : MPoly();
        r.c2[i] = a.c0 * y + b.c0 * x;
    }
    r.c4 = a.c0 * b.c4 + b.c0 * a.c4;
    for (std::size_t i = 0; i < a.c2.size(); ++i) {
        if (a.c2[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c2.size(); ++j) {
            if (b.c2[j].is_zero() || pairing_[i][j].is_zero()) continue;
            r.c4 += a.c2[i] * b.c2[j] * pairing_[i][j];
        }
    }
    return r;
}

CohClass SurfaceModel::pow(const CohClass& a, unsigned e) const
{
    CohClass r = one();
    for (unsigned i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

MPoly SurfaceModel::integrate(const CohClass& a) const { return is_point() ? a.c0 : a.c4; }

std::string SurfaceModel::to_string(const CohClass& a) const
{
    std::ostringstream os;
    bool any = false;
    auto emit = [&](const MPoly& c, const std::string& basis) {
        if (c.is_zero()) return;
        if (any) os << " + ";
        any = true;
        os << "(" << c.to_string() << ")*" << basis;
    };
    emit(a.c0, "1X");
    for (std::size_t i = 0; i < a.c2.size() && i < divisors_.size(); ++i) emit(a.c2[i], divisors_[i]);
    emit(a.c4, "pt");
    if (!any) os << "0";
    return os.str();
}

}  // namespace qzeta
