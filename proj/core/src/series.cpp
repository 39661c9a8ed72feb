#include "qzeta/series.hpp"

#include <sstream>

namespace qzeta {

RSeries series_from_ints(const std::vector<long>& coeffs)
{
    if (coeffs.empty()) throw std::invalid_argument("series needs at least one coefficient");
    RSeries s(static_cast<int>(coeffs.size()) - 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) s[static_cast<int>(i)] = coeffs[i];
    return s;
}

RSeries euler_pow(long c, int N)
{
    // prod_{i<=N} (1 - q^i), built factor by factor in place.
    RSeries e = RSeries::constant(1, N);
    for (int i = 1; i <= N; ++i)
        for (int n = N; n >= i; --n) e[n] -= e[n - i];
    return e.pow(c);
}

PSeries to_poly_series(const RSeries& s)
{
    PSeries r(s.order());
    for (int n = 0; n <= s.order(); ++n) r[n] = MPoly(s[n]);
    return r;
}

std::vector<std::pair<Monomial, RSeries>> slices(const PSeries& s)
{
    std::map<Monomial, RSeries> acc;
    for (int n = 0; n <= s.order(); ++n)
        for (const auto& [m, c] : s[n].terms()) acc.try_emplace(m, s.order()).first->second[n] = c;
    std::vector<std::pair<Monomial, RSeries>> out(acc.begin(), acc.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return monomial_before(a.first, b.first); });
    return out;
}

RSeries slice(const PSeries& s, Monomial m)
{
    RSeries r(s.order());
    for (int n = 0; n <= s.order(); ++n) r[n] = s[n].coefficient(m);
    return r;
}

PSeries substitute(const PSeries& s, const std::map<std::string, Rational>& values)
{
    PSeries r(s.order());
    for (int n = 0; n <= s.order(); ++n) r[n] = s[n].substitute(values);
    return r;
}

PSeries scale(const RSeries& s, const MPoly& p)
{
    PSeries r(s.order());
    for (int n = 0; n <= s.order(); ++n)
        if (sgn(s[n]) != 0) r[n] = p * s[n];
    return r;
}

namespace {

template <class C, class F>
std::string render(const QSeries<C>& s, F coeff_text)
{
    std::ostringstream os;
    bool any = false;
    for (int n = 0; n <= s.order(); ++n) {
        if (coeff_is_zero(s[n])) continue;
        if (any) os << " + ";
        any = true;
        std::string c = coeff_text(s[n]);
        if (n == 0) {
            os << c;
            continue;
        }
        if (c != "1") os << c << "*";
        os << "q";
        if (n > 1) os << "^" << n;
    }
    if (!any) os << "0";
    os << " + O(q^" << s.order() + 1 << ")";
    return os.str();
}

}  // namespace

std::string to_string(const RSeries& s)
{
    return render(s, [](const Rational& c) {
        std::string t = c.get_str();
        return sgn(c) < 0 ? "(" + t + ")" : t;
    });
}

std::string to_string(const PSeries& s)
{
    return render(s, [](const MPoly& c) {
        std::string t = c.to_string();
        bool atomic = c.terms().size() == 1 && sgn(c.terms()[0].second) > 0;
        return atomic ? t : "(" + t + ")";
    });
}

}  // namespace qzeta
