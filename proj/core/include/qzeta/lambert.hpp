#pragma once

#include "qzeta/series.hpp"

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qzeta {

// q^num / prod (1 - q^m)^p. Invariant: den sorted by m, m >= 1, p >= 1, no repeated m.
struct LTerm {
    int num = 0;
    std::vector<std::pair<int, int>> den;

    static LTerm monomial(int num) { return LTerm{num, {}}; }
    static LTerm geometric(int num, int m, int p);

    LTerm& operator*=(const LTerm& o);
    friend LTerm operator*(LTerm a, const LTerm& b) { return a *= b; }
    friend bool operator==(const LTerm& a, const LTerm& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator<(const LTerm& a, const LTerm& b)
    {
        return a.num != b.num ? a.num < b.num : a.den < b.den;
    }
};

struct LTermHash {
    std::size_t operator()(const LTerm& t) const noexcept;
};

// Integer coefficients of the expansion to order N. Returns false on int64 overflow.
bool expand_lterm(const LTerm& t, int N, std::vector<std::int64_t>& out);
std::vector<Integer> expand_lterm_big(const LTerm& t, int N);

// scale * q^a / (1 - q^m)^p expanded to order N.
template <class C>
QSeries<C> lambert_term(int a, int m, int p, const C& scale, int N)
{
    if (a < 0 || m < 1 || p < 1) throw std::invalid_argument("lambert_term requires a >= 0, m >= 1, p >= 1");
    QSeries<C> s(N);
    if (coeff_is_zero(scale)) return s;
    for (int k = 0; a + m * k <= N; ++k) {
        Integer b = binomial(p - 1 + k, k);
        s[a + m * k] = scale * Rational(b);
    }
    return s;
}

// Finite formal sum of LTerm with coefficients in C, collected by term.
// Terms whose leading exponent exceeds the cap are discarded on insertion,
// which is exact for every expansion to order <= cap.
template <class C>
class LambertSum {
public:
    explicit LambertSum(int cap = -1) : cap_(cap) {}

    int cap() const { return cap_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    const std::unordered_map<LTerm, C, LTermHash>& terms() const { return terms_; }

    void add(const LTerm& t, const C& c)
    {
        if (coeff_is_zero(c) || (cap_ >= 0 && t.num > cap_)) return;
        auto [it, inserted] = terms_.try_emplace(t, c);
        if (!inserted) {
            it->second += c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    // this += factor * coeff * other
    template <class D>
    void add_scaled(const LambertSum<D>& other, const LTerm& factor, const C& coeff)
    {
        if (coeff_is_zero(coeff)) return;
        for (const auto& [t, c] : other.terms()) {
            if (cap_ >= 0 && t.num + factor.num > cap_) continue;
            add(t * factor, coeff * c);
        }
    }

    void add_all(const LambertSum& other)
    {
        for (const auto& [t, c] : other.terms_) add(t, c);
    }

    LambertSum& operator*=(const C& c)
    {
        if (coeff_is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& [t, x] : terms_) x = x * c;
        return *this;
    }

    QSeries<C> expand(int N) const;

private:
    int cap_;
    std::unordered_map<LTerm, C, LTermHash> terms_;
};

template <>
QSeries<Rational> LambertSum<Rational>::expand(int N) const;
template <>
QSeries<MPoly> LambertSum<MPoly>::expand(int N) const;

extern template class LambertSum<Rational>;
extern template class LambertSum<MPoly>;

using RLambertSum = LambertSum<Rational>;
using PLambertSum = LambertSum<MPoly>;

}  // namespace qzeta
