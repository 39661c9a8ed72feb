#include "qzeta_cli/app.hpp"

#include "qzeta/json_io.hpp"
#include "qzeta/pipeline.hpp"
#include "qzeta/qmforms.hpp"
#include "qzeta_cli/expr.hpp"
#include "qzeta_cli/word.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <optional>
#include <ostream>

namespace qzeta::cli {

namespace {

constexpr int builtin_default_order = 30;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int default_order()
{
    const char* env = std::getenv("QZETA_DEFAULT_ORDER");
    if (!env || !*env) return builtin_default_order;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0 || v > 100000) throw UsageError(std::string("invalid QZETA_DEFAULT_ORDER '") + env + "'");
    return static_cast<int>(v);
}

void print_table(std::ostream& out, const RSeries& s)
{
    for (int n = 0; n <= s.order(); ++n) out << n << ' ' << to_string(s[n]) << '\n';
}

void print_table(std::ostream& out, const PSeries& s)
{
    for (int n = 0; n <= s.order(); ++n) out << n << ' ' << s[n].to_string() << '\n';
}

int cmd_expand(const std::string& text, int N, bool json, std::ostream& out)
{
    RSeries s = eval(parse(text), N);
    if (json)
        out << to_json(s) << '\n';
    else
        print_table(out, s);
    return 0;
}

int cmd_decompose(const std::string& text, int W, int N, bool json, std::ostream& out)
{
    RSeries s = eval(parse(text), N);
    auto result = decompose(s, W, N);
    if (auto* d = std::get_if<QMDecomposition>(&result)) {
        if (json) {
            nlohmann::ordered_json j;
            j["weight"] = W;
            j["order"] = N;
            j["basis"] = nlohmann::ordered_json::array();
            j["coeffs"] = nlohmann::ordered_json::array();
            for (std::size_t i = 0; i < d->basis.size(); ++i) {
                j["basis"].push_back(d->basis[i].name());
                auto [num, den] = to_string_pair(d->coeffs[i]);
                j["coeffs"].push_back({num, den});
            }
            out << j.dump() << '\n';
        } else {
            for (std::size_t i = 0; i < d->basis.size(); ++i)
                out << d->basis[i].name() << ' ' << to_string(d->coeffs[i]) << '\n';
        }
        return 0;
    }
    const auto& bad = std::get<NotInSpan>(result);
    if (json) {
        nlohmann::ordered_json j;
        j["weight"] = W;
        j["order"] = N;
        j["error"] = "not in span";
        j["degree"] = bad.degree;
        j["expected"] = to_string(bad.expected);
        j["reconstructed"] = to_string(bad.reconstructed);
        out << j.dump() << '\n';
    } else {
        out << "not quasi-modular of weight <= " << W << ": degree " << bad.degree << " has " << to_string(bad.expected)
            << ", the best fit gives " << to_string(bad.reconstructed) << '\n';
    }
    return 1;
}

SurfaceModel surface_from(const std::string& chi, bool k_trivial, bool point)
{
    if (point) {
        if (k_trivial || chi != "symbolic") throw UsageError("--point takes no surface flags");
        return SurfaceModel::equivariant_point();
    }
    std::optional<long> fixed;
    if (chi != "symbolic") {
        char* end = nullptr;
        long v = std::strtol(chi.c_str(), &end, 10);
        if (chi.empty() || *end != '\0') throw UsageError("--chi expects 'symbolic' or an integer");
        fixed = v;
    }
    return SurfaceModel::projective({"L1", "L2"}, k_trivial, fixed);
}

int cmd_trace(const std::string& text, int N, const SurfaceModel& surface, bool vertex, bool json, std::ostream& out)
{
    WordSum words = expand_product(parse_word(text, surface));
    PSeries s(N);
    if (vertex) {
        s = vertex_trace(words, surface, N);
    } else {
        for (const auto& [c, w] : words) s += trace_product(w, surface, N) * MPoly(c);
    }
    if (json)
        out << to_json(s) << '\n';
    else
        print_table(out, s);
    return 0;
}

int cmd_verify(const std::vector<std::string>& checks, int order, bool json, std::ostream& out)
{
    auto results = run_checks(checks.empty() ? std::vector<std::string>{"all"} : checks, order);
    bool all = true;
    for (const auto& r : results) all &= r.passed;
    if (json) {
        out << to_json(results) << '\n';
    } else {
        std::size_t passed = 0;
        for (const auto& r : results) {
            passed += r.passed;
            out << (r.passed ? "PASS " : "FAIL ") << r.name << " (order " << r.order << ")\n";
            if (r.mismatch) {
                out << "  mismatch: " << r.mismatch->label;
                if (r.mismatch->degree >= 0)
                    out << " at q^" << r.mismatch->degree << ": expected " << r.mismatch->expected << ", got "
                        << r.mismatch->actual;
                out << '\n';
            }
            for (const auto& n : r.notes) out << "  note: " << n << '\n';
        }
        out << passed << '/' << results.size() << " checks passed\n";
    }
    return all ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact q-series, quasi-modular decomposition and Fock space traces"};
    app.name("qzeta");
    app.require_subcommand(1);

    std::string expr, word, chi = "symbolic";
    std::optional<int> order;
    int weight = 6;
    bool json = false, k_trivial = false, point = false, vertex = false;
    std::vector<std::string> checks;

    auto* expand = app.add_subcommand("expand", "Expand an expression as a q-series");
    expand->add_option("expr", expr, "Expression, e.g. Z(2)^2 + 7/2*Z(4)")->required();
    expand->add_option("--order", order, "Truncation order")->check(CLI::NonNegativeNumber);
    expand->add_flag("--json", json, "JSON output");

    auto* dec = app.add_subcommand("decompose", "Decompose into Z(2), Z(4), Z(6) monomials");
    dec->add_option("expr", expr, "Expression")->required();
    dec->add_option("--weight", weight, "Weight bound (even)")->check(CLI::NonNegativeNumber);
    dec->add_option("--order", order, "Truncation order")->check(CLI::NonNegativeNumber);
    dec->add_flag("--json", json, "JSON output");

    auto* tr = app.add_subcommand("trace", "Reduced trace of an operator word");
    tr->add_option("word", word, "Word, e.g. 'a[-2,1,1](1X) * a[-1,1](K)'")->required();
    tr->add_option("--order", order, "Truncation order")->check(CLI::NonNegativeNumber);
    tr->add_option("--chi", chi, "'symbolic' or an integer Euler characteristic");
    tr->add_flag("--K-trivial", k_trivial, "Numerically trivial canonical class");
    tr->add_flag("--point", point, "Equivariant point instead of a projective surface");
    tr->add_flag("--vertex", vertex, "Insert the vertex operator and read the z^0 part");
    tr->add_flag("--json", json, "JSON output");

    auto* ver = app.add_subcommand("verify", "Run named verification checks");
    ver->add_option("--check", checks, "Check names, or all")->delimiter(',');
    ver->add_option("--order", order, "Order for every selected check (default: per check)")
        ->check(CLI::PositiveNumber);
    ver->add_flag("--json", json, "JSON output");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*expand) return cmd_expand(expr, order.value_or(default_order()), json, out);
        if (*dec) {
            if (weight % 2 != 0) throw UsageError("--weight must be even");
            return cmd_decompose(expr, weight, order.value_or(default_order()), json, out);
        }
        if (*tr) return cmd_trace(word, order.value_or(default_order()), surface_from(chi, k_trivial, point), vertex, json, out);
        if (*ver) return cmd_verify(checks, order.value_or(0), json, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace qzeta::cli
