#include "qzeta/lambert.hpp"
#include "qzeta/nested_sum.hpp"
#include "qzeta/zeta.hpp"

#include <doctest.h>

using namespace qzeta;

namespace {

RSeries ints(std::vector<long> c) { return series_from_ints(c); }

// Eulerian numbers A(n,k) by the classical recurrence, independent of the
// generating-function solve used by eulerian().
std::vector<Integer> eulerian_row(int n)
{
    std::vector<Integer> row{1};
    for (int m = 1; m <= n; ++m) {
        std::vector<Integer> next(static_cast<std::size_t>(m) + 1, 0);
        for (int k = 0; k <= m; ++k) {
            if (k < m) next[k] += Integer(k + 1) * row[k];
            if (k > 0) next[k] += Integer(m - k) * row[k - 1];
        }
        row = next;
    }
    while (row.size() > 1 && row.back() == 0) row.pop_back();
    return row;
}

// Product of dense lambert_term factors: scale * q^a / prod (1-q^m)^p.
RSeries direct_term(const Rational& scale, int a, const std::vector<std::pair<int, int>>& den, int N)
{
    RSeries s = RSeries::monomial(scale, a, N);
    for (auto [m, p] : den) s *= lambert_term<Rational>(0, m, p, 1, N);
    return s;
}

}  // namespace

TEST_CASE("eulerian polynomials")
{
    CHECK(eulerian(1) == std::vector<Integer>{0, 1});
    CHECK(eulerian(2) == std::vector<Integer>{0, 1});
    CHECK(eulerian(3) == std::vector<Integer>{0, 1, 1});
    CHECK_THROWS(eulerian(0));
    for (int s = 2; s <= 10; ++s) {
        auto e = eulerian(s);
        auto row = eulerian_row(s - 1);
        REQUIRE(e.size() == row.size() + 1);
        CHECK(e[0] == 0);
        for (std::size_t k = 0; k < row.size(); ++k) CHECK(e[k + 1] == row[k]);
    }
}

TEST_CASE("brackets")
{
    CHECK(bracket({1}, 4) == ints({0, 1, 2, 2, 3}));
    CHECK(bracket({2}, 4) == ints({0, 1, 3, 4, 7}));
    CHECK(bracket({}, 5) == RSeries::constant(1, 5));
    CHECK_THROWS(bracket({0}, 5));

    const int N = 40;
    for (int s = 1; s <= 6; ++s) {
        RSeries ref(N);
        for (int d = 1; d <= N; ++d) {
            Integer p;
            mpz_ui_pow_ui(p.get_mpz_t(), d, s - 1);
            ref += lambert_term<Rational>(d, d, 1, Rational(p) / factorial(s - 1), N);
        }
        CHECK(bracket({s}, N) == ref);
    }
}

TEST_CASE("okounkov series")
{
    CHECK(okounkov_z({4}, 7) == ints({0, 0, 1, 4, 11, 20, 40, 56}));
    CHECK(okounkov_z({6}, 7) == ints({0, 0, 0, 1, 6, 21, 57, 126}));
    CHECK_THROWS_WITH(okounkov_z({1}, 5), "Okounkov index must be ≥ 2");

    const int N = 40;
    RSeries z2(N), z3(N);
    for (int n = 1; n <= N; ++n) {
        z2 += lambert_term<Rational>(n, n, 2, 1, N);
        z3 += lambert_term<Rational>(n, n, 3, 1, N) + lambert_term<Rational>(2 * n, n, 3, 1, N);
    }
    CHECK(okounkov_z({2}, N) == z2);
    CHECK(okounkov_z({3}, N) == z3);
}

TEST_CASE("multi-index series agree with brute-force chains")
{
    const int N = 14;
    for (auto idx : std::vector<std::vector<int>>{{2, 3}, {3, 2}, {2, 2, 2}}) {
        RSeries ref(N);
        // n1 > n2 (> n3) by explicit loops over factor products.
        if (idx.size() == 2) {
            for (int a = 2; a <= N; ++a)
                for (int b = 1; b < a; ++b) {
                    RSeries f = okounkov_z({idx[0]}, N), term = RSeries::constant(1, N);
                    (void)f;
                    for (auto [n, s] : {std::pair{a, idx[0]}, std::pair{b, idx[1]}}) {
                        auto Q = okounkov_numerator(s);
                        RSeries num(N);
                        for (std::size_t e = 0; e < Q.size(); ++e)
                            if (n * static_cast<int>(e) <= N) num[n * static_cast<int>(e)] = Q[e];
                        term *= num * lambert_term<Rational>(0, n, s, 1, N);
                    }
                    ref += term;
                }
        } else {
            for (int a = 3; a <= N; ++a)
                for (int b = 2; b < a; ++b)
                    for (int c = 1; c < b; ++c)
                        ref += direct_term(1, a + b + c, {{a, 2}, {b, 2}, {c, 2}}, N);
        }
        CHECK(okounkov_z(idx, N) == ref);
    }
}

TEST_CASE("bernoulli numbers")
{
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == make_rational(-1, 2));
    CHECK(bernoulli(2) == make_rational(1, 6));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(4) == make_rational(-1, 30));
    CHECK(bernoulli(6) == make_rational(1, 42));
    CHECK(bernoulli(12) == make_rational(-691, 2730));
    for (int i = 3; i < 30; i += 2) CHECK(bernoulli(i) == 0);
}

TEST_CASE("eisenstein series")
{
    const int N = 40;
    RSeries z2 = okounkov_z({2}, N), z4 = okounkov_z({4}, N), z6 = okounkov_z({6}, N);
    CHECK(eisenstein(2, N) == RSeries::constant(make_rational(-1, 24), N) + z2);
    CHECK(eisenstein(4, N) == RSeries::constant(make_rational(1, 1440), N) + z2 * make_rational(1, 6) + z4);
    CHECK(eisenstein(6, N) ==
          RSeries::constant(make_rational(-1, 60480), N) + z2 * make_rational(1, 120) + z4 * make_rational(1, 4) + z6);
    CHECK_THROWS(eisenstein(3, N));
    CHECK_THROWS(eisenstein(0, N));
}

TEST_CASE("relations among brackets and Okounkov series")
{
    const int N = 40;
    CHECK(okounkov_z({2}, N) == bracket({2}, N));
    CHECK(okounkov_z({3}, N) == bracket({3}, N) * Rational(2));
    CHECK(okounkov_z({4}, N) == bracket({4}, N) - bracket({2}, N) * make_rational(1, 6));
    RSeries lhs = okounkov_z({3}, N).q_derivative();
    RSeries rhs = okounkov_z({5}, N) * Rational(5) - okounkov_z({3, 2}, N) * Rational(4) -
                  okounkov_z({2, 3}, N) * Rational(6) + okounkov_z({3}, N);
    CHECK(lhs == rhs);
}

TEST_CASE("nested sums: catalog values")
{
    CHECK(eval_builtin("h11_0", 7) == ints({0, 0, 2, 16, 60, 160, 360, 672}));
    CHECK(eval_builtin("divisor_sum", 30) == bracket({2}, 30));
    CHECK(eval_builtin("bra1cor4_lhs", 50) == eval_builtin("bra1cor4_rhs", 50));
    CHECK_THROWS_AS(eval_builtin("no_such_sum", 5), std::invalid_argument);

    const int N = 30;
    RSeries h0 = eval_builtin("h11_0", N);
    // The sums as defined carry the opposite sign to the proportionality
    // constants quoted alongside them; see the h11 discrepancy check.
    CHECK(eval_builtin("h11_2", N) == h0 * make_rational(-5, 4));
    CHECK(eval_builtin("h11_4", N) == h0 * make_rational(1, 4));

    RSeries z3_minus_z2 = okounkov_z({3}, 25) - okounkov_z({2}, 25);
    CHECK(eval_builtin("a_tilde", 25) == z3_minus_z2.q_derivative() * make_rational(1, 2));
}

TEST_CASE("nested sums: generic evaluator against direct enumeration")
{
    const int N = 12;
    RSeries h0(N), h4(N);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; i + j <= N; ++j)
            h0 += direct_term(i * j * (i + j), i + j, {{i, 1}, {j, 1}, {i + j, 1}}, N);
    CHECK(eval_builtin("h11_0", N) == h0);

    for (int i = 1; i <= N; ++i)
        for (int j = 1; i + j <= N; ++j) {
            for (int k = 1; k < i + j; ++k) {
                int l = i + j - k;
                Rational c = make_rational(i + j, 4);
                h4 += direct_term(c, i + j, {{i, 1}, {j, 1}, {k, 1}, {l, 1}, {i + j, 1}}, N);
                h4 += direct_term(c, 2 * (i + j), {{i, 1}, {j, 1}, {k, 1}, {l, 1}, {i + j, 1}}, N);
            }
            for (int k = 1; i + j + k <= N; ++k) {
                std::vector<std::pair<int, int>> d1{{i, 1}, {j, 1}, {k, 1}, {i + j, 1}, {i + j + k, 1}};
                h4 += direct_term(-(i + j), i + j + k, d1, N) + direct_term(-(i + j), 2 * i + 2 * j + k, d1, N);
                std::vector<std::pair<int, int>> d2{{i, 1}, {j, 1}, {k, 1}, {i + k, 1}, {j + k, 1}};
                h4 += direct_term(k, i + j + k, d2, N) + direct_term(k, i + j + 2 * k, d2, N);
            }
        }
    CHECK(eval_builtin("h11_4", N) == h4);

    NestedSum two{"two", 2, SumConstraint::Chain, {}, {}, {}};
    two.terms.push_back(SumTerm{1, {}, LinearForm{{1, 0}, 0}, {{LinearForm{{1, 0}, 0}, 2}, {LinearForm{{0, 1}, 0}, 1}}});
    RSeries ref(20);
    for (int a = 2; a <= 20; ++a)
        for (int b = 1; b < a; ++b) ref += direct_term(1, a, {{a, 2}, {b, 1}}, 20);
    CHECK(eval_nested_sum(two, 20) == ref);
}

TEST_CASE("nested sums: termination check")
{
    // Free index with no weight in the numerator.
    NestedSum bad{"bad", 2, SumConstraint::Free, {}, {}, {}};
    bad.terms.push_back(SumTerm{1, {}, LinearForm{{1, 0}, 0}, {{LinearForm{{1, 1}, 0}, 1}}});
    try {
        check_termination(bad);
        FAIL("expected a termination error");
    } catch (const NestedSumError& e) {
        CHECK(e.index() == 1);
    }

    // The same shape is fine when the index is chained below a bounded one.
    NestedSum chained = bad;
    chained.constraint = SumConstraint::Chain;
    CHECK_NOTHROW(check_termination(chained));

    // Chains do not bound upward: n0 > n1 with weight only on n1.
    NestedSum upward{"upward", 2, SumConstraint::Chain, {}, {}, {}};
    upward.terms.push_back(SumTerm{1, {}, LinearForm{{0, 1}, 0}, {{LinearForm{{1, 0}, 0}, 1}}});
    CHECK_THROWS_AS(check_termination(upward), NestedSumError);

    // Equality constraints transfer bounds from one side to the other.
    NestedSum eq{"eq", 4, SumConstraint::EqualSums, {0, 1}, {2, 3}, {}};
    eq.terms.push_back(SumTerm{1, {}, LinearForm{{0, 0, 1, 1}, 0}, {{LinearForm{{1, 0, 0, 0}, 0}, 1}}});
    CHECK_NOTHROW(check_termination(eq));
    RSeries e = eval_nested_sum(eq, 10);
    // sum over (i,j,k,l), i+j=k+l=s: (s-1)^2 q^s / (1-q^i)
    RSeries ref(10);
    for (int s = 2; s <= 10; ++s)
        for (int i = 1; i < s; ++i) ref += direct_term(s - 1, s, {{i, 1}}, 10);
    CHECK(e == ref);

    NestedSum zero_den{"zero_den", 1, SumConstraint::Free, {}, {}, {}};
    zero_den.terms.push_back(SumTerm{1, {}, LinearForm{{1}, 0}, {{LinearForm{{0}, 0}, 1}}});
    CHECK_THROWS_AS(check_termination(zero_den), NestedSumError);
}
