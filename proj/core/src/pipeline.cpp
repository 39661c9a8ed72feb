#include "qzeta/pipeline.hpp"

#include "qzeta/bruteforce.hpp"
#include "qzeta/nested_sum.hpp"
#include "qzeta/qmforms.hpp"
#include "qzeta/zeta.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>

namespace qzeta {

PSeries f_series_reduced(const FSeriesSpec& spec)
{
    std::vector<OpSum> factors;
    for (const auto& [k, alpha] : spec.factors) {
        if (k != 0 && k != 1) throw std::invalid_argument("F-series factors need k in {0, 1}");
        factors.push_back(chern_op(k, alpha, spec.surface, spec.order));
    }
    return vertex_trace(expand_product(factors), spec.surface, spec.order);
}

PSeries ch1ch1_reduced(const SurfaceModel& surface, int N)
{
    const CohClass one = surface.one();
    const CohClass l1 = surface.divisor("L1"), l2 = surface.divisor("L2");
    PSeries out = f_series_reduced({{{1, one}, {1, one}}, surface, N});
    out += f_series_reduced({{{1, one}, {0, l1}}, surface, N});
    out += f_series_reduced({{{1, one}, {0, l2}}, surface, N});
    out += f_series_reduced({{{0, l1}, {0, l2}}, surface, N});
    return out;
}

namespace {

WordSum equiv_g1_squared(int N)
{
    const auto point = SurfaceModel::equivariant_point();
    OpSum g1 = equiv_chern_op(1, point, N);
    return expand_product({g1, g1});
}

}  // namespace

RSeries equiv_ch1ch1(long m, int N)
{
    return gamma_trace(m, equiv_g1_squared(N), N);
}

namespace {

RSeries Z(int s, int N) { return okounkov_z({s}, N); }

// scale * q^a / prod_i (1 - q^{m_i})
RSeries frac(const Rational& scale, int a, const std::vector<int>& dens, int N)
{
    RSeries s = RSeries::monomial(scale, a, N);
    for (int m : dens) s *= lambert_term<Rational>(0, m, 1, Rational(1), N);
    return s;
}

// Combination over the weight-six basis 1, Z(2), Z(2)^2, Z(4), Z(2)^3, Z(2)Z(4), Z(6).
RSeries qm6(const std::vector<Rational>& c, int N)
{
    RSeries z2 = Z(2, N), z4 = Z(4, N), z6 = Z(6, N);
    std::vector<RSeries> basis{RSeries::constant(1, N), z2, z2 * z2, z4, z2 * z2 * z2, z2 * z4, z6};
    RSeries out(N);
    for (std::size_t i = 0; i < c.size(); ++i) out += basis[i] * c[i];
    return out;
}

Rational r(long n, long d = 1) { return make_rational(n, d); }

std::string coeff_list(const std::vector<Rational>& c)
{
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + to_string(c[i]);
    return s;
}

// Records the first failing degree of an identity; returns whether it held.
bool expect_equal(CheckResult& res, const std::string& label, const RSeries& expected, const RSeries& actual)
{
    int d = first_mismatch(expected, actual);
    if (d < 0) return true;
    if (!res.mismatch) res.mismatch = Mismatch{label, d, to_string(expected[d]), to_string(actual[d])};
    return false;
}

bool expect_equal(CheckResult& res, const std::string& label, const PSeries& expected, const PSeries& actual)
{
    int d = first_mismatch(expected, actual);
    if (d < 0) return true;
    if (!res.mismatch) {
        MPoly diff = actual[d] - expected[d];
        std::string where = diff.terms().empty() ? "" : monomial_to_string(diff.table(), diff.terms().front().first);
        Mismatch m{label, d, expected[d].to_string(), actual[d].to_string()};
        if (!where.empty()) m.label += " [" + where + "]";
        res.mismatch = m;
    }
    return false;
}

bool expect(CheckResult& res, const std::string& label, bool ok)
{
    if (!ok && !res.mismatch) res.mismatch = Mismatch{label, -1, "true", "false"};
    return ok;
}

// ---------------------------------------------------------------- series checks

CheckResult check_euler_partition_oracle(int N)
{
    CheckResult res;
    // p(n) by the coin-change recurrence over parts 1..N.
    std::vector<Integer> p(static_cast<std::size_t>(N) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= N; ++part)
        for (int n = part; n <= N; ++n) p[n] += p[n - part];
    RSeries parts(N);
    for (int n = 0; n <= N; ++n) parts[n] = Rational(p[n]);
    bool ok = expect_equal(res, "(q;q)^-1 against partition counts", parts, euler_pow(-1, N));
    // Pentagonal number theorem for (q;q)^1.
    RSeries pent(N);
    for (long k = -N; k <= N; ++k) {
        long e = k * (3 * k - 1) / 2;
        if (e <= N) pent[static_cast<int>(e)] += Rational(k % 2 ? -1 : 1);
    }
    ok &= expect_equal(res, "(q;q) against pentagonal numbers", pent, euler_pow(1, N));
    res.passed = ok;
    return res;
}

CheckResult check_bracket_defs(int N)
{
    CheckResult res;
    bool ok = true;
    for (int s = 1; s <= 6; ++s) {
        RSeries ref(N);
        for (int n = 1; n <= N; ++n) ref[n] = Rational(divisor_sigma(s - 1, n)) / factorial(static_cast<unsigned>(s - 1));
        ok &= expect_equal(res, "[" + std::to_string(s) + "] against divisor sums", ref, bracket({s}, N));
    }
    // [2,1] by direct enumeration of chains n1 > n2.
    RSeries ref(N);
    auto q2 = bracket_numerator(2), q1 = bracket_numerator(1);
    for (int a = 2; a <= N; ++a)
        for (int b = 1; b < a && a + b <= N; ++b) {
            RSeries fa(N), fb(N);
            for (std::size_t e = 0; e < q2.size(); ++e)
                if (a * static_cast<int>(e) <= N) fa[a * static_cast<int>(e)] = q2[e];
            for (std::size_t e = 0; e < q1.size(); ++e)
                if (b * static_cast<int>(e) <= N) fb[b * static_cast<int>(e)] = q1[e];
            ref += fa * lambert_term<Rational>(0, a, 2, Rational(1), N) * fb * lambert_term<Rational>(0, b, 1, Rational(1), N);
        }
    ok &= expect_equal(res, "[2,1] against chain enumeration", ref, bracket({2, 1}, N));
    res.passed = ok;
    return res;
}

CheckResult check_okounkov_defs(int N)
{
    CheckResult res;
    bool ok = true;
    for (int s = 2; s <= 7; ++s) {
        RSeries ref(N);
        for (int n = 1; s / 2 * n <= N; ++n) {
            if (s % 2 == 0) {
                ref += lambert_term<Rational>(n * s / 2, n, s, Rational(1), N);
            } else {
                int a = n * (s - 1) / 2;
                ref += lambert_term<Rational>(a, n, s, Rational(1), N);
                if (a + n <= N) ref += lambert_term<Rational>(a + n, n, s, Rational(1), N);
            }
        }
        ok &= expect_equal(res, "Z(" + std::to_string(s) + ") against its defining sum", ref, Z(s, N));
    }
    try {
        (void)okounkov_z({1}, 4);
        ok &= expect(res, "Z(1) is rejected", false);
    } catch (const std::invalid_argument&) {
    }
    res.passed = ok;
    return res;
}

CheckResult check_bk3_2_6(int N)
{
    CheckResult res;
    bool ok = expect_equal(res, "Z(2) = [2]", bracket({2}, N), Z(2, N));
    ok &= expect_equal(res, "Z(3) = 2[3]", bracket({3}, N) * Rational(2), Z(3, N));
    ok &= expect_equal(res, "Z(4) = [4] - [2]/6", bracket({4}, N) - bracket({2}, N) * r(1, 6), Z(4, N));
    res.passed = ok;
    return res;
}

CheckResult check_eisenstein_conversion(int N)
{
    CheckResult res;
    RSeries z2 = Z(2, N), z4 = Z(4, N), z6 = Z(6, N);
    auto c = [N](const Rational& v) { return RSeries::constant(v, N); };
    bool ok = expect_equal(res, "G2 = -1/24 + Z(2)", c(r(-1, 24)) + z2, eisenstein(2, N));
    ok &= expect_equal(res, "G4 = 1/1440 + Z(2)/6 + Z(4)", c(r(1, 1440)) + z2 * r(1, 6) + z4, eisenstein(4, N));
    ok &= expect_equal(res, "G6 = -1/60480 + Z(2)/120 + Z(4)/4 + Z(6)",
                       c(r(-1, 60480)) + z2 * r(1, 120) + z4 * r(1, 4) + z6, eisenstein(6, N));
    RSeries swapped = c(r(1, 1440)) + z2 + z4 * r(1, 6);
    int d = first_mismatch(swapped, eisenstein(4, N));
    if (d >= 0)
        res.notes.push_back("the variant G4 = 1/1440 + Z(2) + Z(4)/6 fails at q^" + std::to_string(d) + " (" +
                            to_string(swapped[d]) + " against " + to_string(eisenstein(4, N)[d]) +
                            "); the swapped coefficients hold");
    res.passed = ok;
    return res;
}

CheckResult check_dz3(int N)
{
    CheckResult res;
    RSeries rhs = Z(5, N) * Rational(5) - okounkov_z({3, 2}, N) * Rational(4) - okounkov_z({2, 3}, N) * Rational(6) +
                  Z(3, N);
    res.passed = expect_equal(res, "q d/dq Z(3)", rhs, Z(3, N).q_derivative());
    return res;
}

CheckResult check_bra1cor4(int N)
{
    CheckResult res;
    bool ok = expect_equal(res, "double sum against single sum", eval_builtin("bra1cor4_rhs", N),
                           eval_builtin("bra1cor4_lhs", N));
    RSeries z = Z(3, N) - Z(2, N);
    ok &= expect_equal(res, "derived sum equals q d/dq (Z(3) - Z(2)) / 2", z.q_derivative() * r(1, 2),
                       eval_builtin("a_tilde", N));
    res.passed = ok;
    return res;
}

CheckResult check_qiqj(int N)
{
    CheckResult res;
    bool ok = true;
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j) {
            RSeries lhs = frac(1, 0, {i, j}, N);
            RSeries rhs = (frac(1, 0, {i}, N) + frac(1, j, {j}, N)) * frac(1, 0, {i + j}, N);
            ok &= expect_equal(res, "i=" + std::to_string(i) + " j=" + std::to_string(j), lhs, rhs);
        }
    res.passed = ok;
    return res;
}

// ---------------------------------------------------------------- trace checks

RSeries constant_slice(const PSeries& s)
{
    RSeries out(s.order());
    for (int n = 0; n <= s.order(); ++n) out[n] = s[n].constant_term();
    return out;
}

DecoratedOp single(std::map<int, int> parts, const CohClass& cls)
{
    return DecoratedOp{GenPartition::from_multiplicities(parts), cls, false};
}

CheckResult check_trala_suite(int N)
{
    CheckResult res;
    const auto point = SurfaceModel::equivariant_point();
    const RSeries e1 = euler_pow(1, N);
    bool ok = true;
    struct Form {
        std::string name;
        std::vector<int> word;
        RSeries expected;
    };
    auto check_form = [&](const Form& f) {
        OperatorWord w;
        for (int p : f.word) w.push_back(single({{p, 1}}, point.one()));
        ok &= expect_equal(res, f.name + " recursive", f.expected, constant_slice(trace_product(w, point, N)));
        ok &= expect_equal(res, f.name + " brute force", f.expected, fock_trace_bruteforce(f.word, N) * e1);
    };
    check_form({"vacuum", {}, RSeries::constant(1, N)});
    for (int i = 1; i <= 4; ++i) {
        check_form({"a_-i a_i i=" + std::to_string(i), {-i, i}, frac(i, i, {i}, N)});
        check_form({"a_i a_-i i=" + std::to_string(i), {i, -i}, frac(i, 0, {i}, N)});
        for (int j = 1; j <= 4; ++j) {
            const std::string ij = " i=" + std::to_string(i) + " j=" + std::to_string(j);
            const Rational d = i == j ? 2 : 1;
            check_form({"a_i a_j a_-i a_-j" + ij, {i, j, -i, -j}, frac(d * i * j, 0, {i, j}, N)});
            check_form({"a_-i a_-j a_i a_j" + ij, {-i, -j, i, j}, frac(d * i * j, i + j, {i, j}, N)});
            RSeries seven = frac(i * j, i, {i, j}, N);
            if (i == j) seven += frac(i * j, i + j, {i, j}, N);
            check_form({"a_-i a_j a_-j a_i" + ij, {-i, j, -j, i}, seven});
            RSeries six = frac(d * i * j * (i + j), i + j, {i, j, i + j}, N);
            check_form({"six-operator word A" + ij, {-i, -j, i + j, -i - j, i, j}, six});
            check_form({"six-operator word B" + ij, {-i - j, i, j, -i, -j, i + j}, six});
        }
    }
    res.passed = ok;
    return res;
}

PSeries trace_of_sum(const OpSum& sum, const SurfaceModel& surface, int N)
{
    PSeries out(N);
    for (const auto& t : sum) out += trace_product({t.op}, surface, N) * MPoly(t.coeff * t.op.normalization());
    return out;
}

CheckResult check_tracei1Xj1X(int N)
{
    CheckResult res;
    const auto S = SurfaceModel::projective({"L1", "L2"});
    const std::vector<std::string> names{"1X", "K", "L1", "L2", "pt"};
    bool ok = true;
    for (int i = 1; i <= 4; ++i) {
        const std::string is = " i=" + std::to_string(i);
        for (const auto& a : names)
            for (const auto& b : names) {
                CohClass x = S.named(a), y = S.named(b);
                MPoly pair = S.pair(x, y);
                OperatorWord w1{single({{-i, 1}}, x), single({{i, 1}}, y)};
                OperatorWord w2{single({{i, 1}}, x), single({{-i, 1}}, y)};
                ok &= expect_equal(res, "a_-i(" + a + ") a_i(" + b + ")" + is, scale(frac(-i, i, {i}, N), pair),
                                   trace_product(w1, S, N));
                ok &= expect_equal(res, "a_i(" + a + ") a_-i(" + b + ")" + is, scale(frac(-i, 0, {i}, N), pair),
                                   trace_product(w2, S, N));
            }
        ok &= expect_equal(res, "a_-i a_i(1X)" + is, scale(frac(-i, i, {i}, N), S.chi()),
                           trace_product({single({{-i, 1}, {i, 1}}, S.one())}, S, N));
        ok &= expect_equal(res, "a_i a_-i(1X)" + is, scale(frac(-i, 0, {i}, N), S.chi()),
                           trace_of_sum(canonicalize({i, -i}, S.one(), Rational(1), S), S, N));
    }
    res.passed = ok;
    return res;
}

CheckResult check_trij1Xij1X(int N)
{
    CheckResult res;
    const auto S = SurfaceModel::projective({"L1", "L2"});
    const CohClass one = S.one();
    bool ok = true;
    auto op = [&](std::vector<int> parts) {
        std::map<int, int> m;
        for (int p : parts) ++m[p];
        return single(m, one);
    };
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            const std::string ij = " i=" + std::to_string(i) + " j=" + std::to_string(j);
            const Rational d = i == j ? 2 : 1;
            auto check = [&](const std::string& label, OperatorWord w, const RSeries& expected) {
                ok &= expect_equal(res, label + ij, scale(expected, S.chi()), trace_product(w, S, N));
            };
            check("a_-i a_i+j(1X) a_-i-j a_i(1X)", {op({-i, i + j}), op({-i - j, i})},
                  frac(i * (i + j), i, {i, i + j}, N));
            check("a_-i-j a_i(1X) a_-i a_i+j(1X)", {op({-i - j, i}), op({-i, i + j})},
                  frac(i * (i + j), i + j, {i, i + j}, N));
            check("a_i a_j(1X) a_-i a_-j(1X)", {op({i, j}), op({-i, -j})}, frac(d * i * j, 0, {i, j}, N));
            check("a_-i a_-j(1X) a_i a_j(1X)", {op({-i, -j}), op({i, j})}, frac(d * i * j, i + j, {i, j}, N));
        }
    res.passed = ok;
    return res;
}

CheckResult check_gamma_comm(int)
{
    CheckResult res;
    bool ok = true;
    for (int c : {-1, 0, 1, 2}) {
        auto rep = gamma_commutation_check(c, 8, 6);
        const std::string cs = " pairing " + std::to_string(c);
        ok &= expect(res, "Gamma_+ Gamma_- exchange" + cs, rep.plus_minus);
        ok &= expect(res, "Gamma_- Gamma_- commute" + cs, rep.minus_minus);
        ok &= expect(res, "Gamma_+ Gamma_+ commute" + cs, rep.plus_plus);
    }
    res.notes.push_back("basis states of size <= 8, creation window 6, pairings -1, 0, 1, 2");
    res.passed = ok;
    return res;
}

CheckResult check_str_gk_k1(int N)
{
    CheckResult res;
    const int bound = std::min(N, 6);
    bool ok = true;
    for (int len = 0; len <= 3; ++len)
        for (const auto& l : balanced_partitions(len, bound)) {
            Rational c = equiv_chern_coefficient(1, l);
            Rational want = len == 3 ? 1 : 0;
            if (c != want && !res.mismatch) res.mismatch = Mismatch{"k=1 coefficient of " + l.to_string(), -1, to_string(want), to_string(c)};
            ok &= c == want;
        }
    // The parity vanishing holds in every computed case.
    for (int k = 0; k <= 3; ++k)
        for (int len = 0; len <= k + 2; ++len)
            if ((len - k) % 2 != 0)
                for (const auto& l : balanced_partitions(len, 4)) {
                    Rational c = equiv_chern_coefficient(k, l);
                    if (c != 0 && !res.mismatch)
                        res.mismatch = Mismatch{"parity vanishing for k=" + std::to_string(k) + " at " + l.to_string(), -1, "0", to_string(c)};
                    ok &= c == 0;
                }
    const auto point = SurfaceModel::equivariant_point();
    ok &= expect(res, "operator has exactly the length-three terms",
                 equiv_chern_op(1, point, bound).size() == balanced_partitions(3, bound).size());
    res.notes.push_back("k=0 coefficient of (-1,1) is " + to_string(equiv_chern_coefficient(0, GenPartition::from_multiplicities({{-1, 1}, {1, 1}}))) +
                        " and of the empty partition " + to_string(equiv_chern_coefficient(0, GenPartition{})));
    res.passed = ok;
    return res;
}

CheckResult check_equiv_kodd_vanishing(int N)
{
    CheckResult res;
    const auto point = SurfaceModel::equivariant_point();
    OpSum g1 = equiv_chern_op(1, point, N);
    auto single_terms = expand_product({g1});
    bool ok = true;
    for (long m : {0L, 1L, 2L})
        ok &= expect_equal(res, "<ch1>' at m=" + std::to_string(m), RSeries(N), gamma_trace(m, single_terms, N));
    const int M = std::min(N, 15);
    auto coeffs = gamma_trace_coefficients(equiv_g1_squared(M), M);
    for (long m = 1; m <= 3; ++m)
        ok &= expect_equal(res, "<ch1 ch1>' even in m at m=" + std::to_string(m), eval_m_polynomial(coeffs, m),
                           eval_m_polynomial(coeffs, -m));
    res.passed = ok;
    return res;
}

// ---------------------------------------------------------------- h11 checks

const std::vector<Rational>& stated_h0() { static const std::vector<Rational> c{0, 0, 1, 1, r(-8, 3), 4, r(14, 3)}; return c; }
const std::vector<Rational>& stated_h2() { static const std::vector<Rational> c{0, 0, r(5, 4), r(5, 4), r(-10, 3), 5, r(35, 6)}; return c; }
const std::vector<Rational>& stated_h4() { static const std::vector<Rational> c{0, 0, r(-1, 4), r(-1, 4), r(2, 3), -1, r(-7, 6)}; return c; }

std::string decomposition_note(const std::string& name, const RSeries& f, int N)
{
    if (N < 7 + qm_safety_margin) return name + " not decomposed: order " + std::to_string(N) + " is below the basis margin";
    auto d = decompose(f, 6, N);
    if (auto* q = std::get_if<QMDecomposition>(&d)) return name + " decomposes as (" + coeff_list(q->coeffs) + ")";
    return name + " is not quasi-modular of weight <= 6 to order " + std::to_string(N);
}

CheckResult check_h11_direct_vs_decomp(int N)
{
    CheckResult res;
    RSeries h0 = eval_builtin("h11_0", N);
    bool ok = expect_equal(res, "direct expansion through q^7", series_from_ints({0, 0, 2, 16, 60, 160, 360, 672}),
                           h0.truncate(std::min(N, 7)));
    auto d = decompose(h0, 6, N);
    if (auto* q = std::get_if<QMDecomposition>(&d)) {
        if (q->coeffs != stated_h0() && !res.mismatch)
            res.mismatch = Mismatch{"weight-six coefficients", -1, coeff_list(stated_h0()), coeff_list(q->coeffs)};
        ok &= q->coeffs == stated_h0();
    } else {
        ok &= expect(res, "h11_0 is quasi-modular of weight <= 6", false);
    }
    res.passed = ok;
    return res;
}

CheckResult check_prop_h11024(int N)
{
    CheckResult res;
    bool ok = true;
    const std::vector<std::pair<std::string, const std::vector<Rational>*>> rows{
        {"h11_0", &stated_h0()}, {"h11_2", &stated_h2()}, {"h11_4", &stated_h4()}};
    for (const auto& [name, coeffs] : rows) {
        RSeries h = eval_builtin(name, N);
        ok &= expect_equal(res, name + " against its stated decomposition", qm6(*coeffs, N), h);
        res.notes.push_back(decomposition_note(name, h, N));
    }
    res.passed = ok;
    return res;
}

CheckResult check_corollary_h11024_discrepancy(int N)
{
    CheckResult res;
    struct Chain {
        std::string text;
        Rational c2, c4;  // h0 = c2 h2 = c4 h4
    };
    const std::vector<Chain> chains{{"h0 = 4/5 h4 = -4 h2 (asserted)", r(-4), r(4, 5)},
                                    {"h0 = 4/5 h2 = -4 h4", r(4, 5), r(-4)},
                                    {"h0 = -4/5 h2 = 4 h4", r(-4, 5), r(4)}};
    auto holds = [](const Chain& c, const RSeries& h0, const RSeries& h2, const RSeries& h4) {
        return h0 == h2 * c.c2 && h0 == h4 * c.c4;
    };
    const RSeries p0 = qm6(stated_h0(), N), p2 = qm6(stated_h2(), N), p4 = qm6(stated_h4(), N);
    const RSeries d0 = eval_builtin("h11_0", N), d2 = eval_builtin("h11_2", N), d4 = eval_builtin("h11_4", N);
    std::vector<bool> on_stated, on_defined;
    for (const auto& c : chains) {
        on_stated.push_back(holds(c, p0, p2, p4));
        on_defined.push_back(holds(c, d0, d2, d4));
        res.notes.push_back(c.text + ": " + (on_stated.back() ? "holds" : "fails") + " for the stated decompositions, " +
                            (on_defined.back() ? "holds" : "fails") + " for the defining sums");
    }
    if (!on_stated[0]) res.notes.push_back("flagged: the asserted chain is inconsistent with the stated decompositions");
    bool ok = expect(res, "the stated decompositions satisfy h0 = 4/5 h2 = -4 h4", on_stated[1]);
    ok &= expect(res, "the asserted chain is detected as inconsistent", !on_stated[0]);
    res.passed = ok;
    return res;
}

// ---------------------------------------------------------------- surface checks

MPoly sym(const SurfaceModel& S, const std::string& name) { return MPoly::symbol(S.table(), name); }

RSeries chi_slice(const SurfaceModel& S, const PSeries& f) { return slice(f, S.chi().terms().front().first); }

RSeries f00_l1l2_stated(int N)
{
    RSeries z2 = Z(2, N);
    return Z(4, N) * r(7, 2) - z2 * z2 * r(1, 2) + z2;
}

RSeries f00_l1l2_corrected(int N)
{
    RSeries z2 = Z(2, N);
    return Z(4, N) * Rational(5) - z2 * z2 * Rational(2) + z2;
}

void note_identity(CheckResult& res, const std::string& what, const PSeries& expected, const PSeries& actual)
{
    int d = first_mismatch(expected, actual);
    res.notes.push_back(what + (d < 0 ? " holds" : " fails at q^" + std::to_string(d)));
}

CheckResult check_lemma_f00(int N)
{
    CheckResult res;
    const auto S = SurfaceModel::projective({"L1", "L2"});
    PSeries f = f_series_reduced({{{0, S.divisor("L1")}, {0, S.divisor("L2")}}, S, N});
    RSeries z2 = Z(2, N);
    const MPoly kk = sym(S, "KL1") * sym(S, "KL2"), ll = sym(S, "L1L2");
    PSeries base = scale(z2 * z2, kk);
    res.passed = expect_equal(res, "stated closed form", base + scale(f00_l1l2_stated(N), ll), f);
    note_identity(res, "with 5Z(4) - 2Z(2)^2 + Z(2) on <L1,L2>", base + scale(f00_l1l2_corrected(N), ll), f);
    RSeries inner(N);
    for (int n = 1; n <= N; ++n)
        inner += lambert_term<Rational>(n, n, 3, Rational(n), N) + lambert_term<Rational>(2 * n, n, 3, Rational(n), N);
    note_identity(res, "with the intermediate sum n(q^n + q^2n)/(1-q^n)^3 on <L1,L2>", base + scale(inner, ll), f);
    return res;
}

PSeries f101_expected(const SurfaceModel& S, const std::string& L, int N)
{
    RSeries z = Z(3, N) - Z(2, N);
    const MPoly kl = sym(S, SurfaceModel::pairing_name("K", L));
    return scale(z * Z(2, N) * r(1, 2), sym(S, "K2") * kl) + scale(z.q_derivative() * r(1, 2), kl);
}

CheckResult check_lemma_f101(int N)
{
    CheckResult res;
    const auto S = SurfaceModel::projective({"L"});
    PSeries f = f_series_reduced({{{1, S.one()}, {0, S.divisor("L")}}, S, N});
    res.passed = expect_equal(res, "stated closed form", f101_expected(S, "L", N), f);
    return res;
}

RSeries k2_sums(int N)
{
    return eval_builtin("k2_double", N) + eval_builtin("k2_triple_n", N) + eval_builtin("k2_triple_m", N);
}

PSeries f111_expected(const SurfaceModel& S, int N)
{
    RSeries z = Z(3, N) - Z(2, N);
    PSeries out = scale(eval_builtin("h11_2", N), S.chi());
    if (!S.K_trivial()) {
        MPoly k2 = sym(S, "K2");
        out += scale(z * z * r(1, 4), k2 * k2);
        out += scale(k2_sums(N) - eval_builtin("h11_4", N), k2);
    }
    return out;
}

}  // namespace

CheckResult f111_component_check(int N)
{
    CheckResult res;
    res.name = "lemma_f111";
    res.order = N;
    bool ok = true;
    for (bool k_trivial : {false, true}) {
        const auto S = SurfaceModel::projective({}, k_trivial);
        PSeries f = f_series_reduced({{{1, S.one()}, {1, S.one()}}, S, N});
        ok &= expect_equal(res, k_trivial ? "K trivial" : "general surface", f111_expected(S, N), f);
        if (!k_trivial) res.notes.push_back(decomposition_note("chi-slice", chi_slice(S, f), N));
    }
    res.passed = ok;
    return res;
}

namespace {

CheckResult check_lemma_f111(int N) { return f111_component_check(N); }

// The displayed theorem; corrected replaces the <L1,L2> form, flips the chi
// form and flips the closed-form part of the K^2 coefficient.
PSeries theorem_expected(const SurfaceModel& S, int N, bool corrected)
{
    RSeries z2 = Z(2, N);
    PSeries out = scale(corrected ? f00_l1l2_corrected(N) : f00_l1l2_stated(N), sym(S, "L1L2"));
    const Rational sign = corrected ? -1 : 1;
    out += scale(qm6(stated_h2(), N) * sign, S.chi());
    if (!S.K_trivial()) {
        MPoly k2 = sym(S, "K2");
        out += scale(z2 * z2, sym(S, "KL1") * sym(S, "KL2"));
        out += f101_expected(S, "L1", N) + f101_expected(S, "L2", N);
        RSeries z = Z(3, N) - z2;
        out += scale(z * z * r(1, 4), k2 * k2);
        out += scale(k2_sums(N) - qm6(stated_h4(), N) * sign, k2);
    }
    return out;
}

CheckResult check_theorem(int N, bool k_trivial)
{
    CheckResult res;
    const auto S = SurfaceModel::projective({"L1", "L2"}, k_trivial);
    PSeries f = ch1ch1_reduced(S, N);
    res.passed = expect_equal(res, "stated closed form", theorem_expected(S, N, false), f);
    note_identity(res, "with 5Z(4) - 2Z(2)^2 + Z(2) on <L1,L2> and the chi and K^2 closed forms negated",
                  theorem_expected(S, N, true), f);
    res.notes.push_back(decomposition_note("chi-slice", chi_slice(S, f), N));
    return res;
}

CheckResult check_theorem_main(int N) { return check_theorem(N, false); }
CheckResult check_theorem_K_trivial(int N) { return check_theorem(N, true); }

struct Entry {
    std::string name;
    int order;
    std::function<CheckResult(int)> run;
};

const std::vector<Entry>& registry()
{
    static const std::vector<Entry> r{
        {"euler_partition_oracle", 50, check_euler_partition_oracle},
        {"bracket_defs", 40, check_bracket_defs},
        {"okounkov_defs", 40, check_okounkov_defs},
        {"bk3_2_6", 40, check_bk3_2_6},
        {"eisenstein_conversion", 40, check_eisenstein_conversion},
        {"dz3", 40, check_dz3},
        {"bra1cor4", 50, check_bra1cor4},
        {"qiqj", 40, check_qiqj},
        {"trala_suite", 20, check_trala_suite},
        {"tracei1Xj1X", 20, check_tracei1Xj1X},
        {"trij1Xij1X", 20, check_trij1Xij1X},
        {"gamma_comm", 8, check_gamma_comm},
        {"str_gk_k1", 6, check_str_gk_k1},
        {"equiv_kodd_vanishing", 20, check_equiv_kodd_vanishing},
        {"h11_direct_vs_decomp", 30, check_h11_direct_vs_decomp},
        {"prop_h11024", 30, check_prop_h11024},
        {"corollary_h11024_discrepancy", 30, check_corollary_h11024_discrepancy},
        {"lemma_f00", 25, check_lemma_f00},
        {"lemma_f101", 20, check_lemma_f101},
        {"lemma_f111", 12, check_lemma_f111},
        {"theorem_main", 12, check_theorem_main},
        {"theorem_K_trivial", 20, check_theorem_K_trivial},
    };
    return r;
}

const Entry& find_entry(const std::string& name)
{
    for (const auto& e : registry())
        if (e.name == name) return e;
    throw UnknownCheck("unknown check '" + name + "'");
}

}  // namespace

const std::vector<std::string>& check_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& e : registry()) n.push_back(e.name);
        return n;
    }();
    return names;
}

int default_check_order(const std::string& name) { return find_entry(name).order; }

CheckResult run_check(const std::string& name, int order)
{
    const Entry& e = find_entry(name);
    const int N = order > 0 ? order : e.order;
    auto t0 = std::chrono::steady_clock::now();
    CheckResult res;
    try {
        res = e.run(N);
    } catch (const std::exception& ex) {
        res = CheckResult{};
        res.mismatch = Mismatch{std::string("error: ") + ex.what(), -1, "", ""};
    }
    res.name = e.name;
    res.order = N;
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

std::vector<CheckResult> run_checks(const std::vector<std::string>& names, int order)
{
    std::vector<std::string> selected;
    if (std::find(names.begin(), names.end(), "all") != names.end()) {
        selected = check_names();
    } else {
        for (const auto& n : names) {
            find_entry(n);
            if (std::find(selected.begin(), selected.end(), n) == selected.end()) selected.push_back(n);
        }
    }
    std::vector<std::future<CheckResult>> jobs;
    for (const auto& n : selected) jobs.push_back(std::async(std::launch::async, [n, order] { return run_check(n, order); }));
    std::vector<CheckResult> out;
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

namespace {

nlohmann::ordered_json result_json(const CheckResult& r)
{
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["status"] = r.passed ? "pass" : "fail";
    j["order"] = r.order;
    if (r.mismatch) {
        nlohmann::ordered_json m;
        m["label"] = r.mismatch->label;
        m["degree"] = r.mismatch->degree;
        m["expected"] = r.mismatch->expected;
        m["actual"] = r.mismatch->actual;
        j["mismatch"] = m;
    } else {
        j["mismatch"] = nullptr;
    }
    j["notes"] = r.notes;
    return j;
}

}  // namespace

std::string to_json(const CheckResult& r) { return result_json(r).dump(); }

std::string to_json(const std::vector<CheckResult>& results)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : results) arr.push_back(result_json(r));
    return arr.dump(2);
}

}  // namespace qzeta
