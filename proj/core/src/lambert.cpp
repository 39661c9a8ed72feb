#include "qzeta/lambert.hpp"

#include <algorithm>
#include <map>

namespace qzeta {

LTerm LTerm::geometric(int num, int m, int p)
{
    if (m < 1 || p < 0) throw std::invalid_argument("invalid geometric factor");
    LTerm t{num, {}};
    if (p > 0) t.den.emplace_back(m, p);
    return t;
}

LTerm& LTerm::operator*=(const LTerm& o)
{
    num += o.num;
    if (o.den.empty()) return *this;
    std::vector<std::pair<int, int>> merged;
    merged.reserve(den.size() + o.den.size());
    auto a = den.begin();
    auto b = o.den.begin();
    while (a != den.end() || b != o.den.end()) {
        if (b == o.den.end() || (a != den.end() && a->first < b->first)) {
            merged.push_back(*a++);
        } else if (a == den.end() || b->first < a->first) {
            merged.push_back(*b++);
        } else {
            merged.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    den = std::move(merged);
    return *this;
}

std::size_t LTermHash::operator()(const LTerm& t) const noexcept
{
    std::size_t h = std::hash<int>{}(t.num) * 0x9e3779b97f4a7c15ULL;
    for (const auto& [m, p] : t.den) {
        h ^= static_cast<std::size_t>(m) * 0x100000001b3ULL + static_cast<std::size_t>(p) + (h << 6) + (h >> 2);
    }
    return h;
}

bool expand_lterm(const LTerm& t, int N, std::vector<std::int64_t>& out)
{
    out.assign(static_cast<std::size_t>(N) + 1, 0);
    if (t.num > N) return true;
    out[static_cast<std::size_t>(t.num)] = 1;
    for (const auto& [m, p] : t.den) {
        for (int r = 0; r < p; ++r) {
            for (int n = t.num + m; n <= N; ++n) {
                if (__builtin_add_overflow(out[n], out[n - m], &out[n])) return false;
            }
        }
    }
    return true;
}

std::vector<Integer> expand_lterm_big(const LTerm& t, int N)
{
    std::vector<Integer> out(static_cast<std::size_t>(N) + 1, 0);
    if (t.num > N) return out;
    out[static_cast<std::size_t>(t.num)] = 1;
    for (const auto& [m, p] : t.den)
        for (int r = 0; r < p; ++r)
            for (int n = t.num + m; n <= N; ++n) out[n] += out[n - m];
    return out;
}

namespace {

// Sums c_k * series_k with all c_k scaled by a common denominator so the inner
// loop runs on machine integers; falls back to GMP integers on overflow.
class ScaledAccumulator {
public:
    explicit ScaledAccumulator(int N) : N_(N), acc_(static_cast<std::size_t>(N) + 1, 0) {}

    void note_denominator(const Rational& c)
    {
        mpz_lcm(den_.get_mpz_t(), den_.get_mpz_t(), c.get_den_mpz_t());
    }

    void add(const Rational& c, const LTerm& t, const std::vector<std::int64_t>* small,
             const std::vector<Integer>* big_series)
    {
        Integer k = c.get_num() * (den_ / c.get_den());
        if (!big_ && small && k.fits_slong_p()) {
            __int128 kk = k.get_si();
            for (int n = t.num; n <= N_; ++n) {
                std::int64_t v = (*small)[n];
                if (v == 0) continue;
                __int128 prod = kk * static_cast<__int128>(v);
                if (__builtin_add_overflow(acc_[n], prod, &acc_[n])) {
                    rebuild_from(n, kk, *small);
                    return;
                }
            }
            return;
        }
        go_big();
        if (small) {
            for (int n = t.num; n <= N_; ++n)
                if ((*small)[n] != 0) big_acc_[n] += k * Integer(static_cast<long>((*small)[n]));
        } else {
            for (int n = t.num; n <= N_; ++n) big_acc_[n] += k * (*big_series)[n];
        }
    }

    Rational value(int n) const
    {
        Integer v = big_ ? big_acc_[n] : to_integer(acc_[n]);
        return make_rational(v, den_);
    }

private:
    static Integer to_integer(__int128 x)
    {
        bool neg = x < 0;
        unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
        Integer hi(static_cast<unsigned long>(u >> 64));
        Integer lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
        Integer r = (hi << 64) + lo;
        return neg ? Integer(-r) : r;
    }

    void go_big()
    {
        if (big_) return;
        big_acc_.resize(acc_.size());
        for (std::size_t i = 0; i < acc_.size(); ++i) big_acc_[i] = to_integer(acc_[i]);
        big_ = true;
    }

    // The add at degree `failed` overflowed: move to big integers and redo the
    // remaining degrees of the current term there.
    void rebuild_from(int failed, __int128 kk, const std::vector<std::int64_t>& small)
    {
        // The builtin stored the wrapped sum; undo it exactly.
        __int128 prod = kk * static_cast<__int128>(small[failed]);
        unsigned __int128 wrapped = static_cast<unsigned __int128>(acc_[failed]) - static_cast<unsigned __int128>(prod);
        acc_[failed] = static_cast<__int128>(wrapped);
        go_big();
        Integer k = to_integer(kk);
        for (int n = failed; n <= N_; ++n)
            if (small[n] != 0) big_acc_[n] += k * Integer(static_cast<long>(small[n]));
    }

    int N_;
    Integer den_ = 1;
    std::vector<__int128> acc_;
    std::vector<Integer> big_acc_;
    bool big_ = false;
};

struct Expanded {
    std::vector<std::int64_t> small;
    std::vector<Integer> big;
    bool is_small = true;

    void compute(const LTerm& t, int N)
    {
        is_small = expand_lterm(t, N, small);
        if (!is_small) big = expand_lterm_big(t, N);
    }
};

}  // namespace

template <>
QSeries<Rational> LambertSum<Rational>::expand(int N) const
{
    ScaledAccumulator acc(N);
    for (const auto& [t, c] : terms_) acc.note_denominator(c);
    Expanded e;
    for (const auto& [t, c] : terms_) {
        if (t.num > N) continue;
        e.compute(t, N);
        acc.add(c, t, e.is_small ? &e.small : nullptr, e.is_small ? nullptr : &e.big);
    }
    QSeries<Rational> s(N);
    for (int n = 0; n <= N; ++n) s[n] = acc.value(n);
    return s;
}

template <>
QSeries<MPoly> LambertSum<MPoly>::expand(int N) const
{
    SymbolTablePtr table;
    std::map<Monomial, ScaledAccumulator> accs;
    for (const auto& [t, c] : terms_) {
        if (!table && c.table()) table = c.table();
        for (const auto& [m, r] : c.terms()) accs.try_emplace(m, N).first->second.note_denominator(r);
    }
    Expanded e;
    for (const auto& [t, c] : terms_) {
        if (t.num > N) continue;
        e.compute(t, N);
        for (const auto& [m, r] : c.terms())
            accs.at(m).add(r, t, e.is_small ? &e.small : nullptr, e.is_small ? nullptr : &e.big);
    }
    QSeries<MPoly> s(N);
    for (int n = 0; n <= N; ++n) {
        std::vector<MPoly::Term> terms;
        for (auto& [m, acc] : accs) {
            Rational v = acc.value(n);
            if (sgn(v) != 0) terms.emplace_back(m, v);
        }
        s[n] = MPoly(table, std::move(terms));
    }
    return s;
}

template class LambertSum<Rational>;
template class LambertSum<MPoly>;

}  // namespace qzeta
