#include "qzeta/qmforms.hpp"

#include "qzeta/zeta.hpp"

#include <algorithm>
#include <stdexcept>

namespace qzeta {

std::string QMMonomial::name() const
{
    std::string s;
    auto factor = [&s](const char* z, int e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += z;
        if (e > 1) s += "^" + std::to_string(e);
    };
    factor("Z(2)", a);
    factor("Z(4)", b);
    factor("Z(6)", c);
    return s.empty() ? "1" : s;
}

QMBasis qm_basis(int W, int N)
{
    if (W < 0 || W % 2) throw std::invalid_argument("weight bound must be a nonnegative even integer");
    QMBasis basis;
    basis.weight_bound = W;
    for (int c = 0; 6 * c <= W; ++c)
        for (int b = 0; 6 * c + 4 * b <= W; ++b)
            for (int a = 0; 6 * c + 4 * b + 2 * a <= W; ++a) basis.monomials.push_back({a, b, c});
    std::sort(basis.monomials.begin(), basis.monomials.end(), [](const QMMonomial& x, const QMMonomial& y) {
        if (x.weight() != y.weight()) return x.weight() < y.weight();
        if (x.a != y.a) return x.a > y.a;
        return x.b > y.b;
    });
    const int need = static_cast<int>(basis.monomials.size()) + qm_safety_margin;
    if (N < need)
        throw std::invalid_argument("order " + std::to_string(N) + " too small for weight " + std::to_string(W) +
                                    " (need at least " + std::to_string(need) + ")");
    RSeries z2 = okounkov_z({2}, N), z4 = okounkov_z({4}, N), z6 = okounkov_z({6}, N);
    for (const auto& m : basis.monomials)
        basis.series.push_back(z2.pow(m.a) * z4.pow(m.b) * z6.pow(m.c));
    return basis;
}

int QMDecomposition::weight() const
{
    int w = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (sgn(coeffs[i]) != 0) w = std::max(w, basis[i].weight());
    return w;
}

Rational QMDecomposition::coefficient(const QMMonomial& m) const
{
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == m) return coeffs[i];
    return 0;
}

DecomposeResult decompose(const RSeries& f, int W, int N)
{
    if (f.order() < N) throw std::invalid_argument("series order is below the requested verification order");
    QMBasis basis = qm_basis(W, N);
    const std::size_t k = basis.monomials.size();

    // Row echelon form built degree by degree, so the square system on degrees
    // 0..k-1 is used whenever it is nonsingular and later degrees fill in otherwise.
    struct Row {
        std::vector<Rational> a;
        Rational rhs;
        std::size_t pivot;
    };
    std::vector<Row> rows;
    for (int n = 0; n <= N && rows.size() < k; ++n) {
        std::vector<Rational> a(k);
        for (std::size_t j = 0; j < k; ++j) a[j] = basis.series[j][n];
        Rational rhs = f[n];
        for (const auto& r : rows) {
            if (sgn(a[r.pivot]) == 0) continue;
            Rational m = a[r.pivot];
            for (std::size_t j = 0; j < k; ++j) a[j] -= m * r.a[j];
            rhs -= m * r.rhs;
        }
        auto nz = std::find_if(a.begin(), a.end(), [](const Rational& x) { return sgn(x) != 0; });
        if (nz == a.end()) continue;  // dependent row; consistency is checked by the residual pass
        std::size_t p = static_cast<std::size_t>(nz - a.begin());
        Rational inv = 1 / a[p];
        for (auto& x : a) x *= inv;
        rhs *= inv;
        for (auto& r : rows) {
            if (sgn(r.a[p]) == 0) continue;
            Rational m = r.a[p];
            for (std::size_t j = 0; j < k; ++j) r.a[j] -= m * a[j];
            r.rhs -= m * rhs;
        }
        rows.push_back({std::move(a), rhs, p});
    }
    if (rows.size() < k) throw std::invalid_argument("underdetermined system: increase the order");

    QMDecomposition d;
    d.weight_bound = W;
    d.verified_to = N;
    d.basis = basis.monomials;
    d.coeffs.assign(k, 0);
    for (const auto& r : rows) d.coeffs[r.pivot] = r.rhs;

    for (int n = 0; n <= N; ++n) {
        Rational v = 0;
        for (std::size_t j = 0; j < k; ++j) v += d.coeffs[j] * basis.series[j][n];
        if (v != f[n]) return NotInSpan{n, f[n], v};
    }
    return d;
}

std::vector<SliceDecomposition> decompose_mpoly(const PSeries& f, int W, int N)
{
    std::vector<SliceDecomposition> out;
    for (auto& [m, s] : slices(f)) out.push_back({m, decompose(s, W, N)});
    return out;
}

}  // namespace qzeta
