// Acceptance gate: one line per criterion.
//
// Exit status is 0 when every criterion has its recorded status. Criteria 3
// and 7 are recorded as failing: the stated closed forms disagree with the
// defining sums and with the trace engine (see README). With --strict any
// FAIL gives a nonzero status.

#include "qzeta/bruteforce.hpp"
#include "qzeta/json_io.hpp"
#include "qzeta/nested_sum.hpp"
#include "qzeta/pipeline.hpp"
#include "qzeta/qmforms.hpp"
#include "qzeta/zeta.hpp"
#include "qzeta_cli/expr.hpp"

#include "expr_gen.hpp"

#include <chrono>
#include <cstring>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

using namespace qzeta;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;  // the first failure
    std::vector<std::string> failed_checks;

    void require(bool ok, const std::string& what)
    {
        if (!ok && passed) detail = what;
        passed &= ok;
    }

    void require(const CheckResult& r)
    {
        std::string what = r.name;
        if (r.mismatch) {
            what += ": " + r.mismatch->label;
            if (r.mismatch->degree >= 0)
                what += " at q^" + std::to_string(r.mismatch->degree) + " (expected " + r.mismatch->expected +
                        ", got " + r.mismatch->actual + ")";
        }
        if (!r.passed) failed_checks.push_back(r.name);
        require(r.passed, what);
    }
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    bool expected_pass;
    std::function<Outcome()> run;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome golden_files()
{
    Outcome o;
    const std::vector<std::pair<std::string, std::vector<int>>> cases{
        {"Z2", {2}}, {"Z2_sq", {2, 2}}, {"Z4", {4}}, {"Z2_cube", {2, 2, 2}}, {"Z2_Z4", {2, 4}}, {"Z6", {6}}};
    for (const auto& [file, factors] : cases) {
        RSeries golden = rseries_from_json(read_file(std::string(QZETA_GOLDEN_DIR) + "/" + file + ".json"));
        RSeries s = RSeries::constant(1, golden.order());
        for (int f : factors) s *= okounkov_z({f}, golden.order());
        o.require(golden.order() >= 7 && s == golden, file + " golden file");
    }
    return o;
}

Outcome h11_prop()
{
    Outcome o;
    o.require(run_check("prop_h11024", 30));
    o.require(run_check("corollary_h11024_discrepancy", 30));
    return o;
}

Outcome identity_suite()
{
    Outcome o;
    for (const auto& [name, order] : std::vector<std::pair<std::string, int>>{
             {"bra1cor4", 50}, {"dz3", 40}, {"bk3_2_6", 40}, {"eisenstein_conversion", 40}, {"qiqj", 40}})
        o.require(run_check(name, order));
    return o;
}

Outcome oracle_equivalence()
{
    Outcome o;
    const int N = 15;
    const auto point = SurfaceModel::equivariant_point();
    const RSeries e1 = euler_pow(1, N);
    std::size_t words = 0;
    for (const auto& [w, tr] : fock_trace_bruteforce_all(3, 6, N)) {
        OperatorWord ow;
        for (int p : w) ow.push_back(DecoratedOp{GenPartition({p}), point.one(), false});
        PSeries engine = trace_product(ow, point, N);
        RSeries constant(N);
        for (int n = 0; n <= N; ++n) constant[n] = engine[n].constant_term();
        std::string label = "word";
        for (int p : w) label += " " + std::to_string(p);
        o.require(constant == tr * e1, label);
        ++words;
    }
    o.require(words > 50000, "word enumeration");
    o.require(run_check("trala_suite", 20));
    if (o.passed) o.detail = std::to_string(words) + " words";
    return o;
}

Outcome equivariant_pipeline()
{
    Outcome o;
    const int N = 15;
    const RSeries h0 = eval_builtin("h11_0", N), h2 = eval_builtin("h11_2", N), h4 = eval_builtin("h11_4", N);
    for (long m : {0L, 1L, 2L}) {
        Rational m2(m * m);
        o.require(equiv_ch1ch1(m, N) == h4 * (m2 * m2) + h2 * m2 + h0, "ch1 ch1 at m=" + std::to_string(m));
    }
    o.require(run_check("equiv_kodd_vanishing", N));
    return o;
}

Outcome surface_pipeline()
{
    Outcome o;
    for (const auto& [name, order] : std::vector<std::pair<std::string, int>>{
             {"lemma_f00", 25}, {"lemma_f101", 20}, {"lemma_f111", 12}, {"theorem_main", 12}, {"theorem_K_trivial", 20}})
        o.require(run_check(name, order));
    return o;
}

RSeries random_series(std::mt19937& rng, int N)
{
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
    RSeries s(N);
    for (int n = 0; n <= N; ++n) s[n] = make_rational(num(rng), den(rng));
    return s;
}

Outcome property_suites()
{
    Outcome o;
    const int N = 20;
    std::mt19937 rng(12345);
    for (int t = 0; t < 50; ++t) {
        RSeries a = random_series(rng, N), b = random_series(rng, N), c = random_series(rng, N);
        const RSeries one = RSeries::constant(1, N);
        o.require((a + b) + c == a + (b + c) && a + b == b + a, "additive axioms");
        o.require((a * b) * c == a * (b * c) && a * b == b * a, "multiplicative axioms");
        o.require(a * (b + c) == a * b + a * c && a * one == a, "distributivity and unit");
        o.require((a - a).is_zero(), "additive inverse");
        if (!is_zero(a[0])) o.require(a * a.inverse() == one, "multiplicative inverse");
        o.require((a * b).q_derivative() == a.q_derivative() * b + a * b.q_derivative(), "q d/dq Leibniz rule");
    }
    o.require(run_check("euler_partition_oracle", 50));

    const int M = 24;
    QMBasis basis = qm_basis(6, M);
    auto coeffs_of = [&](const RSeries& f) -> std::optional<std::vector<Rational>> {
        auto d = decompose(f, 6, M);
        if (auto* q = std::get_if<QMDecomposition>(&d)) return q->coeffs;
        return std::nullopt;
    };
    for (std::size_t i = 0; i < basis.series.size(); ++i) {
        auto c = coeffs_of(basis.series[i]);
        std::vector<Rational> delta(basis.series.size(), 0);
        delta[i] = 1;
        o.require(c && *c == delta, "basis delta recovery for " + basis.monomials[i].name());
    }
    std::uniform_int_distribution<int> small(-5, 5);
    for (int t = 0; t < 20; ++t) {
        RSeries f(M), g(M);
        for (const auto& s : basis.series) {
            f += s * Rational(small(rng));
            g += s * Rational(small(rng));
        }
        Rational x = make_rational(small(rng), 3), y = make_rational(small(rng), 7);
        auto cf = coeffs_of(f), cg = coeffs_of(g), cs = coeffs_of(f * x + g * y);
        bool ok = cf && cg && cs;
        for (std::size_t i = 0; ok && i < cs->size(); ++i) ok = (*cs)[i] == x * (*cf)[i] + y * (*cg)[i];
        o.require(ok, "decomposition linearity");
    }

    qzeta::testing::ExprGen gen(20240611u, false);
    for (int i = 0; i < 1000; ++i) {
        std::string text = gen.gen(4);
        cli::Expr e = cli::parse(text);
        o.require(cli::parse(cli::print(e)) == e, "parser round-trip on " + text);
    }
    return o;
}

}  // namespace

int main(int argc, char** argv)
{
    bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
    const std::vector<Criterion> criteria{
        {1, "golden series files", 1, true, golden_files},
        {2, "h11_0 direct sum and decomposition", 30, true, [] {
             Outcome o;
             o.require(run_check("h11_direct_vs_decomp", 30));
             return o;
         }},
        {3, "h11_2 and h11_4 decompositions and the proportionality chain", 60, false, h11_prop},
        {4, "identity suite", 30, true, identity_suite},
        {5, "recursive trace engine against the brute-force oracle", 120, true, oracle_equivalence},
        {6, "equivariant pipeline", 120, true, equivariant_pipeline},
        {7, "surface pipeline closed forms", 300, false, surface_pipeline},
        {8, "property suites", 60, true, property_suites},
    };

    int unexpected = 0, failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.passed = false;
            o.detail = std::string("error: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = secs < c.limit_seconds;
        bool pass = o.passed && in_time;
        if (!in_time && o.passed) o.detail = "over the time limit";
        failed += !pass;
        unexpected += pass != c.expected_pass;

        std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title << "  ("
                  << std::fixed << std::setprecision(2) << secs << " s, limit " << std::setprecision(0)
                  << c.limit_seconds << " s)";
        if (!o.detail.empty()) std::cout << "  [" << o.detail << "]";
        if (o.failed_checks.size() > 1) {
            std::cout << "  failing checks:";
            for (const auto& n : o.failed_checks) std::cout << ' ' << n;
        }
        if (!pass && !c.expected_pass) std::cout << "  known failure";
        if (pass && !c.expected_pass) std::cout << "  unexpected pass";
        std::cout << '\n';
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << '/' << criteria.size()
              << " criteria pass, " << unexpected << " differ from the recorded status\n";
    return (strict ? failed : unexpected) == 0 ? 0 : 1;
}
