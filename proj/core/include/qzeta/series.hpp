#pragma once

#include "qzeta/mpoly.hpp"
#include "qzeta/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qzeta {

// Truncated power series c_0 + c_1 q + ... + c_N q^N + O(q^{N+1}).
// Invariant: coeffs().size() == order() + 1. Binary operations truncate to
// the smaller order.
template <class C>
class QSeries {
public:
    QSeries() : coeffs_(1) {}
    explicit QSeries(int order) : coeffs_(checked_size(order)) {}
    QSeries(int order, std::vector<C> coeffs) : coeffs_(std::move(coeffs))
    {
        coeffs_.resize(checked_size(order));
    }

    static QSeries constant(const C& c, int order)
    {
        QSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    static QSeries monomial(const C& c, int exponent, int order)
    {
        QSeries s(order);
        if (exponent < 0) throw std::invalid_argument("negative exponent in power series");
        if (exponent <= order) s.coeffs_[static_cast<std::size_t>(exponent)] = c;
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<C>& coeffs() const { return coeffs_; }
    const C& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    C& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }

    QSeries truncate(int order) const
    {
        if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
        return QSeries(order, std::vector<C>(coeffs_.begin(), coeffs_.begin() + order + 1));
    }

    bool is_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const C& c) { return coeff_is_zero(c); });
    }

    // Lowest degree with a nonzero coefficient, or order()+1 for the zero series.
    int valuation() const
    {
        for (int n = 0; n <= order(); ++n)
            if (!coeff_is_zero(coeffs_[static_cast<std::size_t>(n)])) return n;
        return order() + 1;
    }

    QSeries& operator+=(const QSeries& o)
    {
        shrink_to(o.order());
        for (int n = 0; n <= order(); ++n) coeffs_[n] += o.coeffs_[n];
        return *this;
    }

    QSeries& operator-=(const QSeries& o)
    {
        shrink_to(o.order());
        for (int n = 0; n <= order(); ++n) coeffs_[n] -= o.coeffs_[n];
        return *this;
    }

    QSeries& operator*=(const C& c)
    {
        for (auto& x : coeffs_) x *= c;
        return *this;
    }

    QSeries operator-() const
    {
        QSeries r = *this;
        for (auto& x : r.coeffs_) x = -x;
        return r;
    }

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(QSeries a, const C& c) { return a *= c; }
    friend QSeries operator*(const C& c, QSeries a) { return a *= c; }

    friend QSeries operator*(const QSeries& a, const QSeries& b)
    {
        int N = std::min(a.order(), b.order());
        QSeries r(N);
        for (int i = 0; i <= N; ++i) {
            const C& x = a.coeffs_[i];
            if (coeff_is_zero(x)) continue;
            for (int j = 0; i + j <= N; ++j) {
                const C& y = b.coeffs_[j];
                if (coeff_is_zero(y)) continue;
                r.coeffs_[i + j] += x * y;
            }
        }
        return r;
    }

    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

    friend bool operator==(const QSeries& a, const QSeries& b)
    {
        return a.order() == b.order() && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

    // Requires an invertible constant term.
    QSeries inverse() const
    {
        C c0inv = invert_coeff(coeffs_[0]);
        QSeries r(order());
        r.coeffs_[0] = c0inv;
        for (int n = 1; n <= order(); ++n) {
            C acc{};
            for (int k = 1; k <= n; ++k) {
                if (coeff_is_zero(coeffs_[k])) continue;
                acc += coeffs_[k] * r.coeffs_[n - k];
            }
            r.coeffs_[n] = -(acc * c0inv);
        }
        return r;
    }

    QSeries pow(long e) const
    {
        if (e < 0) return inverse().pow(-e);
        QSeries result = constant(C(1), order());
        QSeries base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    // q d/dq
    QSeries q_derivative() const
    {
        QSeries r = *this;
        for (int n = 0; n <= order(); ++n) r.coeffs_[n] *= Rational(n);
        return r;
    }

private:
    static std::size_t checked_size(int order)
    {
        if (order < 0) throw std::invalid_argument("series order must be nonnegative");
        return static_cast<std::size_t>(order) + 1;
    }

    void shrink_to(int order)
    {
        if (order < this->order()) coeffs_.resize(static_cast<std::size_t>(order) + 1);
    }

    std::vector<C> coeffs_;
};

using RSeries = QSeries<Rational>;
using PSeries = QSeries<MPoly>;

RSeries series_from_ints(const std::vector<long>& coeffs);

// (q;q)_inf^c to order N; negative c goes through series inversion.
RSeries euler_pow(long c, int N);

PSeries to_poly_series(const RSeries& s);

// Coefficientwise polynomial slices: monomial -> rational series.
std::vector<std::pair<Monomial, RSeries>> slices(const PSeries& s);

// Coefficient of a monomial in every degree.
RSeries slice(const PSeries& s, Monomial m);

PSeries substitute(const PSeries& s, const std::map<std::string, Rational>& values);

// Sum of the series coefficients times a polynomial: s * p.
PSeries scale(const RSeries& s, const MPoly& p);

std::string to_string(const RSeries& s);
std::string to_string(const PSeries& s);

// First degree where the two series differ, or -1 when equal up to the common order.
template <class C>
int first_mismatch(const QSeries<C>& a, const QSeries<C>& b)
{
    int N = std::min(a.order(), b.order());
    for (int n = 0; n <= N; ++n)
        if (!(a[n] == b[n])) return n;
    return -1;
}

}  // namespace qzeta
