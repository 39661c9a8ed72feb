#include "qzeta/bruteforce.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>

namespace qzeta {

namespace {

// Multiplicity vector indexed by part; index 0 unused.
using State = std::vector<int>;

void partitions_up_to(int N, int width, std::vector<State>& out)
{
    State cur(static_cast<std::size_t>(width) + 1, 0);
    std::function<void(int, int)> rec = [&](int max_part, int left) {
        out.push_back(cur);
        for (int p = std::min(max_part, left); p >= 1; --p) {
            ++cur[p];
            rec(p, left - p);
            --cur[p];
        }
    };
    rec(N, N);
}

int state_size(const State& s)
{
    int n = 0;
    for (std::size_t p = 1; p < s.size(); ++p) n += static_cast<int>(p) * s[p];
    return n;
}

// Applies a_part in place; returns the scalar factor, 0 when the result vanishes.
std::int64_t apply(State& s, int part)
{
    if (part < 0) {
        ++s[static_cast<std::size_t>(-part)];
        return 1;
    }
    int& m = s[static_cast<std::size_t>(part)];
    if (m == 0) return 0;
    std::int64_t f = static_cast<std::int64_t>(part) * m;
    --m;
    return f;
}

void undo(State& s, int part)
{
    if (part < 0)
        --s[static_cast<std::size_t>(-part)];
    else
        ++s[static_cast<std::size_t>(part)];
}

}  // namespace

RSeries fock_trace_bruteforce(const std::vector<int>& word, int N)
{
    int width = N;
    for (int p : word) {
        if (p == 0) throw std::invalid_argument("a_0 does not occur");
        width = std::max(width, p < 0 ? -p : p);
    }
    std::vector<State> basis;
    partitions_up_to(N, width, basis);
    RSeries out(N);
    for (const auto& b : basis) {
        State s = b;
        Integer c = 1;
        for (auto it = word.rbegin(); it != word.rend() && c != 0; ++it) c *= Integer(static_cast<long>(apply(s, *it)));
        if (c != 0 && s == b) out[state_size(b)] += Rational(c);
    }
    return out;
}

std::vector<std::pair<std::vector<int>, RSeries>> fock_trace_bruteforce_all(int max_part, int max_len, int N)
{
    if (max_part < 1 || max_len < 0) throw std::invalid_argument("invalid word bounds");
    const int letters = 2 * max_part;
    std::vector<int> letter;
    for (int p = 1; p <= max_part; ++p) {
        letter.push_back(-p);
        letter.push_back(p);
    }
    const std::int64_t base = letters + 1;
    std::int64_t codes = 1;
    for (int i = 0; i < max_len; ++i) codes *= base;
    // traces[code * (N+1) + degree]; code spells the word with its first letter
    // in the least significant digit, digits 1..letters.
    const std::size_t stride = static_cast<std::size_t>(N) + 1;
    std::vector<std::int64_t> traces(static_cast<std::size_t>(codes) * stride, 0);

    std::vector<State> basis;
    partitions_up_to(N, std::max(N, max_part), basis);
    for (const auto& b : basis) {
        const std::size_t deg = static_cast<std::size_t>(state_size(b));
        State s = b;
        // Operators act right to left, so each step prepends a letter.
        std::function<void(int, std::int64_t, std::int64_t)> rec = [&](int len, std::int64_t code, std::int64_t c) {
            if (s == b) traces[static_cast<std::size_t>(code) * stride + deg] += c;
            if (len == max_len) return;
            for (int d = 0; d < letters; ++d) {
                std::int64_t f = apply(s, letter[static_cast<std::size_t>(d)]);
                if (f == 0) continue;
                rec(len + 1, code * base + d + 1, c * f);
                undo(s, letter[static_cast<std::size_t>(d)]);
            }
        };
        rec(0, 0, 1);
    }

    std::vector<std::pair<std::vector<int>, RSeries>> out;
    for (std::int64_t code = 0; code < codes; ++code) {
        std::vector<int> word;
        bool valid = true;
        for (std::int64_t x = code; x > 0; x /= base) {
            std::int64_t digit = x % base;
            if (digit == 0) {
                valid = false;
                break;
            }
            word.push_back(letter[static_cast<std::size_t>(digit - 1)]);
        }
        if (!valid) continue;
        RSeries t(N);
        for (std::size_t n = 0; n < stride; ++n)
            t[static_cast<int>(n)] = Rational(static_cast<long>(traces[static_cast<std::size_t>(code) * stride + n]));
        out.emplace_back(std::move(word), std::move(t));
    }
    return out;
}

namespace {

// Vector over basis states with coefficients in x^{-1} and y, keyed by
// (state, y-degree, x^{-1}-degree).
using Key = std::tuple<State, int, int>;
using Vec = std::map<Key, Rational>;

State trimmed(State s)
{
    while (s.size() > 1 && s.back() == 0) s.pop_back();
    return s;
}

void add_to(Vec& v, Key k, const Rational& c)
{
    if (sgn(c) == 0) return;
    std::get<0>(k) = trimmed(std::get<0>(k));
    auto [it, inserted] = v.try_emplace(std::move(k), c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) v.erase(it);
    }
}

// exp(sum_n t^n b_{-n} / n) with t = y (or x when use_x), creation degree <= window.
Vec gamma_minus(const Vec& in, int window, bool use_x)
{
    Vec out;
    for (const auto& [key, c] : in) {
        const auto& [st, ydeg, xdeg] = key;
        int used = use_x ? -xdeg : ydeg;
        State cur = st;
        std::vector<int> added(static_cast<std::size_t>(window) + 1, 0);
        // Enumerate partitions mu of size <= window - used: prod_n 1/(n^{k_n} k_n!).
        std::function<void(int, int, Rational)> rec = [&](int max_part, int size, Rational w) {
            int total = used + size;
            if (use_x)
                add_to(out, Key{cur, ydeg, -total}, c * w);
            else
                add_to(out, Key{cur, total, xdeg}, c * w);
            for (int p = max_part; p >= 1; --p) {
                if (total + p > window) continue;
                if (cur.size() <= static_cast<std::size_t>(p)) cur.resize(static_cast<std::size_t>(p) + 1, 0);
                ++cur[static_cast<std::size_t>(p)];
                ++added[static_cast<std::size_t>(p)];
                // One more copy of p in mu multiplies the weight by 1/(p * k_p).
                rec(p, size + p, w / Rational(p * added[static_cast<std::size_t>(p)]));
                --added[static_cast<std::size_t>(p)];
                --cur[static_cast<std::size_t>(p)];
            }
        };
        rec(window, 0, Rational(1));
    }
    return out;
}

// exp(-c sum_n t^{-n} b_n / n) with t = x (or y when use_y); exact, finitely many terms.
Vec gamma_plus(const Vec& in, int c, bool use_y)
{
    Vec out;
    for (const auto& [key, coeff] : in) {
        const auto& [st, ydeg, xdeg] = key;
        State cur = st;
        // Removing j copies of part n: (-c/n)^j / j! * n^j m!/(m-j)! = (-c)^j binom(m, j).
        std::function<void(std::size_t, int, Rational)> rec = [&](std::size_t p, int removed, Rational w) {
            if (p >= st.size()) {
                if (use_y)
                    add_to(out, Key{cur, ydeg - removed, xdeg}, coeff * w);
                else
                    add_to(out, Key{cur, ydeg, xdeg + removed}, coeff * w);
                return;
            }
            const int m = st[p];
            Rational cj = 1;
            for (int j = 0; j <= m; ++j) {
                cur[p] = m - j;
                rec(p + 1, removed + j * static_cast<int>(p), w * cj * Rational(binomial(m, j)));
                cj *= -c;
            }
            cur[p] = m;
        };
        rec(1, 0, Rational(1));
    }
    return out;
}

Vec truncate_y(const Vec& v, int window)
{
    Vec out;
    for (const auto& [k, c] : v)
        if (std::get<1>(k) <= window) out.emplace(k, c);
    return out;
}

}  // namespace

GammaCommutationReport gamma_commutation_check(int pairing, int max_state, int window)
{
    if (max_state < 0 || window < 0) throw std::invalid_argument("invalid truncation");
    std::vector<State> basis;
    partitions_up_to(max_state, std::max(max_state, 1), basis);
    GammaCommutationReport r{true, true, true};
    for (const auto& b : basis) {
        Vec v;
        add_to(v, Key{b, 0, 0}, Rational(1));

        // Gamma_+(x) Gamma_-(y) against (1 - y/x)^c Gamma_-(y) Gamma_+(x).
        Vec lhs = gamma_plus(gamma_minus(v, window, false), pairing, false);
        Vec rhs0 = gamma_minus(gamma_plus(v, pairing, false), window, false);
        Vec rhs;
        for (const auto& [k, c] : rhs0) {
            Rational binom = 1;
            for (int j = 0; std::get<1>(k) + j <= window; ++j) {
                Rational term = (j % 2 ? -binom : binom);
                add_to(rhs, Key{std::get<0>(k), std::get<1>(k) + j, std::get<2>(k) + j}, c * term);
                binom = binom * Rational(pairing - j) / Rational(j + 1);
            }
        }
        if (truncate_y(lhs, window) != truncate_y(rhs, window)) r.plus_minus = false;

        // Two creation sides in independent variables.
        Vec mm1 = gamma_minus(gamma_minus(v, window, false), window, true);
        Vec mm2 = gamma_minus(gamma_minus(v, window, true), window, false);
        if (mm1 != mm2) r.minus_minus = false;

        // Two annihilation sides; y-degrees here count removed size with a minus sign.
        Vec pp1 = gamma_plus(gamma_plus(v, pairing, false), pairing, true);
        Vec pp2 = gamma_plus(gamma_plus(v, pairing, true), pairing, false);
        if (pp1 != pp2) r.plus_plus = false;
    }
    return r;
}

}  // namespace qzeta
