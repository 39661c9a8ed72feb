#include "qzeta/zeta.hpp"

#include <mutex>
#include <stdexcept>

namespace qzeta {

std::vector<Integer> eulerian(int s)
{
    if (s < 1) throw std::invalid_argument("Eulerian index must be >= 1");
    // (1-t)^s * sum_{d>=1} d^{s-1} t^d, truncated at degree s.
    std::vector<Integer> c(static_cast<std::size_t>(s) + 1, 0);
    for (int j = 1; j <= s; ++j) {
        for (int i = 0; i < j; ++i) {
            Integer term = binomial(s, i);
            Integer power;
            mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(j - i), static_cast<unsigned long>(s - 1));
            term *= power;
            if (i % 2) c[j] -= term;
            else c[j] += term;
        }
    }
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    return c;
}

std::vector<Rational> bracket_numerator(int s)
{
    if (s < 1) throw std::invalid_argument("bracket index must be >= 1");
    auto e = eulerian(s);
    Rational f = factorial(static_cast<unsigned>(s - 1));
    std::vector<Rational> r;
    for (const auto& x : e) r.push_back(Rational(x) / f);
    return r;
}

std::vector<Rational> okounkov_numerator(int s)
{
    if (s < 2) throw std::invalid_argument("Okounkov index must be ≥ 2");
    std::vector<Rational> r(static_cast<std::size_t>((s + 1) / 2) + 1, 0);
    if (s % 2 == 0) {
        r[s / 2] = 1;
    } else {
        r[(s - 1) / 2] = 1;
        r[(s + 1) / 2] = 1;
    }
    return r;
}

namespace {

// Q(q^n) / (1 - q^n)^s, nonzero only at multiples of n.
RSeries chain_factor(const std::vector<Rational>& Q, int s, int n, int N)
{
    RSeries r(N);
    for (std::size_t a = 0; a < Q.size(); ++a) {
        if (sgn(Q[a]) == 0) continue;
        for (int k = 0; n * (static_cast<int>(a) + k) <= N; ++k)
            r[n * (static_cast<int>(a) + k)] += Q[a] * Rational(binomial(s - 1 + k, k));
    }
    return r;
}

}  // namespace

RSeries z_q(const std::vector<std::vector<Rational>>& numerators, const std::vector<int>& s, int N)
{
    if (numerators.size() != s.size()) throw std::invalid_argument("numerator/index length mismatch");
    const std::size_t l = s.size();
    for (const auto& Q : numerators)
        if (!Q.empty() && sgn(Q[0]) != 0) throw std::invalid_argument("Z_Q numerator must vanish at 0");
    // S[j] = sum over chains of positions j..l-1 with top index <= current n.
    std::vector<RSeries> S(l + 1, RSeries(N));
    S[l] = RSeries::constant(1, N);
    for (int n = 1; n <= N; ++n) {
        // Walk j upward so S[j+1] still holds its value at n-1.
        for (std::size_t j = 0; j < l; ++j) {
            RSeries f = chain_factor(numerators[j], s[j], n, N);
            const RSeries& below = S[j + 1];
            RSeries add(N);
            for (int a = n; a <= N; a += n) {
                if (sgn(f[a]) == 0) continue;
                for (int b = 0; a + b <= N; ++b)
                    if (sgn(below[b]) != 0) add[a + b] += f[a] * below[b];
            }
            S[j] += add;
        }
    }
    return S[0];
}

RSeries bracket(const std::vector<int>& idx, int N)
{
    std::vector<std::vector<Rational>> Q;
    for (int s : idx) Q.push_back(bracket_numerator(s));
    return z_q(Q, idx, N);
}

RSeries okounkov_z(const std::vector<int>& idx, int N)
{
    std::vector<std::vector<Rational>> Q;
    for (int s : idx) Q.push_back(okounkov_numerator(s));
    return z_q(Q, idx, N);
}

Rational bernoulli(int i)
{
    if (i < 0) throw std::invalid_argument("Bernoulli index must be >= 0");
    static std::mutex mu;
    static std::vector<Rational> cache{Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    // sum_{k=0}^{n} C(n+1,k) B_k = 0 for n >= 1.
    while (static_cast<int>(cache.size()) <= i) {
        long n = static_cast<long>(cache.size());
        Rational acc = 0;
        for (long k = 0; k < n; ++k) acc += Rational(binomial(n + 1, k)) * cache[k];
        cache.push_back(-acc / Rational(n + 1));
    }
    return cache[static_cast<std::size_t>(i)];
}

Integer divisor_sigma(int k, long n)
{
    Integer total = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
        total += p;
        long e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(k));
            total += p;
        }
    }
    return total;
}

RSeries eisenstein(int weight, int N)
{
    if (weight < 2 || weight % 2) throw std::invalid_argument("Eisenstein weight must be even and >= 2");
    const int k = weight / 2;
    Rational f = factorial(static_cast<unsigned>(weight - 1));
    RSeries g(N);
    g[0] = -bernoulli(weight) / (Rational(4 * k) * f);
    for (int n = 1; n <= N; ++n) g[n] = Rational(divisor_sigma(weight - 1, n)) / f;
    return g;
}

}  // namespace qzeta
