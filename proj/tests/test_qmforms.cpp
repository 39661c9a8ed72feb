#include "qzeta/nested_sum.hpp"
#include "qzeta/qmforms.hpp"
#include "qzeta/zeta.hpp"

#include <doctest.h>

#include <random>

using namespace qzeta;

namespace {

const QMMonomial one{0, 0, 0}, z2{1, 0, 0}, z2sq{2, 0, 0}, z4{0, 1, 0}, z2cu{3, 0, 0}, z2z4{1, 1, 0}, z6{0, 0, 1};

QMDecomposition ok(const DecomposeResult& r)
{
    REQUIRE(std::holds_alternative<QMDecomposition>(r));
    return std::get<QMDecomposition>(r);
}

std::vector<Rational> coeffs(std::initializer_list<Rational> c) { return c; }

}  // namespace

TEST_CASE("basis enumeration")
{
    auto b6 = qm_basis(6, 30);
    CHECK(b6.monomials == std::vector<QMMonomial>{one, z2, z2sq, z4, z2cu, z2z4, z6});
    CHECK(qm_basis(0, 20).monomials == std::vector<QMMonomial>{one});
    CHECK(qm_basis(4, 20).monomials == std::vector<QMMonomial>{one, z2, z2sq, z4});
    CHECK(qm_basis(8, 30).monomials.size() == 11);
    CHECK_THROWS(qm_basis(6, 16));
    CHECK_NOTHROW(qm_basis(6, 17));
    CHECK_THROWS(qm_basis(5, 30));
    CHECK(z2z4.name() == "Z(2)*Z(4)");
    CHECK(z2cu.name() == "Z(2)^3");
}

TEST_CASE("basis delta recovery")
{
    auto b = qm_basis(6, 30);
    for (std::size_t i = 0; i < b.monomials.size(); ++i) {
        const auto d = ok(decompose(b.series[i], 6, 30));
        for (std::size_t j = 0; j < b.monomials.size(); ++j) CHECK(d.coeffs[j] == (i == j ? 1 : 0));
        CHECK(d.weight() == b.monomials[i].weight());
    }
}

TEST_CASE("zero and constant series")
{
    const auto d = ok(decompose(RSeries(30), 6, 30));
    for (const auto& c : d.coeffs) CHECK(c == 0);
    CHECK(d.weight() == 0);
    const auto c = ok(decompose(RSeries::constant(make_rational(-3, 7), 30), 6, 30));
    CHECK(c.coefficient(one) == make_rational(-3, 7));
}

TEST_CASE("non quasi-modular input is reported with a degree")
{
    auto r = decompose(bracket({1}, 30), 6, 30);
    REQUIRE(std::holds_alternative<NotInSpan>(r));
    const auto& n = std::get<NotInSpan>(r);
    CHECK(n.degree >= 7);
    CHECK(n.expected != n.reconstructed);
    CHECK_THROWS(decompose(bracket({1}, 10), 6, 30));
}

TEST_CASE("linearity")
{
    std::mt19937 rng(21);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
    auto b = qm_basis(6, 30);
    for (int trial = 0; trial < 10; ++trial) {
        RSeries f(30), g(30);
        for (const auto& s : b.series) {
            f += s * make_rational(num(rng), den(rng));
            g += s * make_rational(num(rng), den(rng));
        }
        Rational alpha = make_rational(num(rng), den(rng)), beta = make_rational(num(rng), den(rng));
        const auto df = ok(decompose(f, 6, 30));
        const auto dg = ok(decompose(g, 6, 30));
        const auto dh = ok(decompose(f * alpha + g * beta, 6, 30));
        for (std::size_t j = 0; j < b.monomials.size(); ++j)
            CHECK(dh.coeffs[j] == alpha * df.coeffs[j] + beta * dg.coeffs[j]);
    }
}

TEST_CASE("h11 components decompose in weight six")
{
    const int N = 30;
    const auto d0 = ok(decompose(eval_builtin("h11_0", N), 6, N));
    CHECK(d0.coeffs == coeffs({0, 0, 1, 1, make_rational(-8, 3), 4, make_rational(14, 3)}));
    CHECK(d0.weight() == 6);
    const auto d2 = ok(decompose(eval_builtin("h11_2", N), 6, N));
    CHECK(d2.coeffs == coeffs({0, 0, make_rational(-5, 4), make_rational(-5, 4), make_rational(10, 3), -5,
                               make_rational(-35, 6)}));
    const auto d4 = ok(decompose(eval_builtin("h11_4", N), 6, N));
    CHECK(d4.coeffs == coeffs({0, 0, make_rational(1, 4), make_rational(1, 4), make_rational(-2, 3), 1,
                               make_rational(7, 6)}));
}

TEST_CASE("polynomial slices decompose independently")
{
    auto t = make_symbol_table({"chi", "L1L2"});
    const int N = 20;
    auto b = qm_basis(6, N);
    MPoly chi = MPoly::symbol(t, "chi"), l = MPoly::symbol(t, "L1L2");
    PSeries f = scale(b.series[3] * make_rational(7, 2) - b.series[2] * make_rational(1, 2) + b.series[1], l) +
                scale(b.series[6], chi) + scale(RSeries::constant(5, N), MPoly(1));
    auto parts = decompose_mpoly(f, 6, N);
    REQUIRE(parts.size() == 3);
    for (const auto& p : parts) {
        const auto d = ok(p.result);
        if (p.monomial == 0) {
            CHECK(d.coefficient(one) == 5);
        } else if (MPoly::monomial(t, p.monomial, 1) == l) {
            CHECK(d.coefficient(z4) == make_rational(7, 2));
            CHECK(d.coefficient(z2sq) == make_rational(-1, 2));
            CHECK(d.coefficient(z2) == 1);
        } else {
            CHECK(d.coefficient(z6) == 1);
        }
    }
}
