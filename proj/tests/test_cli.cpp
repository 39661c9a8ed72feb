#include "qzeta/json_io.hpp"
#include "qzeta/nested_sum.hpp"
#include "qzeta/zeta.hpp"
#include "qzeta_cli/app.hpp"
#include "qzeta_cli/expr.hpp"
#include "qzeta_cli/word.hpp"

#include "expr_gen.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace qzeta;
using namespace qzeta::cli;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run_cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ParseError parse_error_of(const std::string& text)
{
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("no parse error for " << text);
    return ParseError(0, 0, "");
}


}  // namespace

TEST_CASE("parser precedence")
{
    CHECK(parse("1 + 2 * 3") == parse("1 + (2 * 3)"));
    CHECK(parse("-Z(2)^2") == parse("-(Z(2)^2)"));
    // An integer ratio is one literal, so it binds tighter than *.
    CHECK(parse("2 * 3 / 4") == parse("2 * (3/4)"));
    CHECK(parse("Z(2) * Z(3) / Z(4)") == parse("(Z(2) * Z(3)) / Z(4)"));
    CHECK(parse("1 - 2 - 3") == parse("(1 - 2) - 3"));
    CHECK(parse("Z(2)^-1").exponent == -1);
    Expr lit = parse("7/2");
    CHECK(lit.kind == Expr::Kind::Literal);
    CHECK(lit.value == make_rational(7, 2));
    CHECK(parse("7/2*Z(4)").kind == Expr::Kind::Mul);
    CHECK(parse("7 / Z(4)").kind == Expr::Kind::Div);
    CHECK(parse("sum(\"h11_0\")").name == "h11_0");
}

TEST_CASE("parse errors carry a position and the expected tokens")
{
    auto e = parse_error_of("Z(1)");
    CHECK(e.line() == 1);
    CHECK(e.column() == 3);
    CHECK(std::string(e.what()).find("must be") != std::string::npos);

    e = parse_error_of("Z(2) +");
    CHECK(e.column() == 7);
    CHECK(e.expected().count("Z"));
    CHECK(e.expected().count("number"));

    e = parse_error_of("Z(2)\n  * Y(3)");
    CHECK(e.line() == 2);
    CHECK(e.column() == 5);

    CHECK(parse_error_of("B[0]").column() == 3);
    CHECK(parse_error_of("G(3)").column() == 3);
    CHECK(parse_error_of("Z(2,3").expected().count("')'"));
    CHECK(parse_error_of("sum(\"nope\")").message().find("unknown named sum") != std::string::npos);
    CHECK(parse_error_of("1/0").message() == "zero denominator");
    CHECK(parse_error_of("Z(2) Z(3)").expected().count("end of input"));
    CHECK(parse_error_of("Z(2) $").column() == 6);
}

TEST_CASE("evaluation")
{
    const int N = 15;
    CHECK(eval(parse("Z(2)"), N) == okounkov_z({2}, N));
    CHECK(eval(parse("B[2,1]"), N) == bracket({2, 1}, N));
    CHECK(eval(parse("G(4)"), N) == eisenstein(4, N));
    CHECK(eval(parse("EulerPow(-1) * EulerPow(1)"), N) == RSeries::constant(1, N));
    CHECK(eval(parse("D(Z(3)) - 5*Z(5) + 4*Z(3,2) + 6*Z(2,3) - Z(3)"), N).is_zero());
    CHECK(eval(parse("G(2) + 1/24"), N) == okounkov_z({2}, N));
    CHECK(eval(parse("sum(\"h11_4\")"), N) == eval_builtin("h11_4", N));
    CHECK(eval(parse("(1 + Z(2))^-2 * (1 + Z(2))^2"), N) == RSeries::constant(1, N));
    CHECK(eval(parse("2^0"), N) == RSeries::constant(1, N));
    CHECK_THROWS_AS(eval(parse("1 / Z(2)"), N), EvalError);
    CHECK_THROWS_AS(eval(parse("Z(2)^-1"), N), EvalError);
}

TEST_CASE("golden expansions")
{
    const std::string dir = QZETA_GOLDEN_DIR;
    const std::vector<std::pair<std::string, std::string>> cases{
        {"Z2", "Z(2)"}, {"Z2_sq", "Z(2)^2"}, {"Z4", "Z(4)"},
        {"Z2_cube", "Z(2)^3"}, {"Z2_Z4", "Z(2)*Z(4)"}, {"Z6", "Z(6)"}};
    for (const auto& [file, text] : cases) {
        CAPTURE(file);
        RSeries golden = rseries_from_json(read_file(dir + "/" + file + ".json"));
        CHECK(eval(parse(text), golden.order()) == golden);
    }
}

TEST_CASE("print and parse round-trip on a random corpus")
{
    qzeta::testing::ExprGen gen(20240611u, false);
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        std::string text = gen.gen(4);
        CAPTURE(text);
        Expr e = parse(text);
        std::string printed = print(e);
        CAPTURE(printed);
        CHECK(parse(printed) == e);
        CHECK(print(parse(printed)) == printed);
        ++checked;
    }
    CHECK(checked == 1000);
}

TEST_CASE("evaluation is a ring homomorphism on random expressions")
{
    const int N = 8;
    qzeta::testing::ExprGen gen(99u, true);
    for (int i = 0; i < 60; ++i) {
        std::string a = gen.gen(2), b = gen.gen(2), c = gen.gen(2);
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(c);
        RSeries lhs = eval(parse("(" + a + ") * ((" + b + ") + (" + c + "))"), N);
        RSeries rhs = eval(parse("(" + a + ") * (" + b + ") + (" + a + ") * (" + c + ")"), N);
        CHECK(lhs == rhs);
        CHECK(eval(parse("(" + a + ") - (" + a + ")"), N).is_zero());
    }
}

TEST_CASE("operator words")
{
    auto S = SurfaceModel::projective({"L1", "L2"});
    auto w = parse_word("a[-2,1,1](1X)/! * a[-1](L1)", S);
    REQUIRE(w.size() == 2);
    REQUIRE(w[0].size() == 1);
    CHECK(w[0][0].op.normalized);
    CHECK(w[0][0].op.partition == GenPartition({-2, 1, 1}));
    CHECK(w[1][0].op.cls == S.divisor("L1"));

    auto swapped = parse_word("a[1,-1](1X)", S);
    REQUIRE(swapped.size() == 1);
    CHECK(collect(swapped[0]) == collect(canonicalize({1, -1}, S.one(), Rational(1), S)));

    try {
        parse_word("a[-1](L3)", S);
        FAIL("accepted an unknown class");
    } catch (const ParseError& e) {
        CHECK(e.column() == 7);
        CHECK(e.expected().count("L2"));
    }
    CHECK_THROWS_AS(parse_word("a[0](K)", S), ParseError);
    CHECK_THROWS_AS(parse_word("a[-1](K) a[1](K)", S), ParseError);
    CHECK_THROWS_AS(parse_word("", S), ParseError);
}

TEST_CASE("command line: expand and decompose")
{
    auto r = run_cli({"expand", "Z(2)", "--order", "7"});
    CHECK(r.code == 0);
    CHECK(r.out == "0 0\n1 1\n2 3\n3 4\n4 7\n5 6\n6 12\n7 8\n");

    r = run_cli({"expand", "Z(2)", "--order", "7", "--json"});
    CHECK(r.code == 0);
    CHECK(rseries_from_json(r.out) == rseries_from_json(read_file(std::string(QZETA_GOLDEN_DIR) + "/Z2.json")));
    CHECK(run_cli({"expand", "Z(2)", "--order", "7", "--json"}).out == r.out);

    r = run_cli({"expand", "Z(1)"});
    CHECK(r.code == 2);
    CHECK(r.err.find("column 3") != std::string::npos);

    r = run_cli({"decompose", "Z(2)^2 + 7/2*Z(4)", "--order", "20"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Z(2)^2 1\n") != std::string::npos);
    CHECK(r.out.find("Z(4) 7/2\n") != std::string::npos);

    r = run_cli({"decompose", "Z(3)", "--order", "20"});
    CHECK(r.code == 1);
    CHECK(r.out.find("not quasi-modular") != std::string::npos);

    CHECK(run_cli({"decompose", "Z(2)", "--weight", "5"}).code == 2);
    CHECK(run_cli({"decompose", "Z(2)", "--order", "5"}).code == 2);
}

TEST_CASE("command line: trace")
{
    auto r = run_cli({"trace", "a[-1](L1) * a[1](L2)", "--order", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "0 0\n1 -L1L2\n2 -L1L2\n3 -L1L2\n");

    r = run_cli({"trace", "a[-1,1](1X)", "--order", "2", "--vertex", "--chi", "24", "--K-trivial"});
    CHECK(r.code == 0);
    CHECK(r.out == "0 0\n1 -24\n2 -24\n");

    r = run_cli({"trace", "a[-1,1](1X)", "--order", "2", "--point"});
    CHECK(r.code == 0);
    CHECK(r.out == "0 0\n1 1\n2 1\n");

    CHECK(run_cli({"trace", "a[-1](L3)"}).code == 2);
    CHECK(run_cli({"trace", "a[-1](K)", "--chi", "x"}).code == 2);
    CHECK(run_cli({"trace", "a[-1](K)", "--point", "--K-trivial"}).code == 2);
}

TEST_CASE("command line: verify")
{
    auto r = run_cli({"verify", "--check", "dz3,qiqj"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS dz3 (order 40)") != std::string::npos);
    CHECK(r.out.find("2/2 checks passed") != std::string::npos);

    r = run_cli({"verify", "--check", "prop_h11024", "--order", "20"});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL prop_h11024 (order 20)") != std::string::npos);
    CHECK(r.out.find("expected 5/2, got -5/2") != std::string::npos);

    r = run_cli({"verify", "--check", "dz3", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out == run_cli({"verify", "--check", "dz3", "--json"}).out);

    CHECK(run_cli({"verify", "--check", "nope"}).code == 2);
}

TEST_CASE("command line: usage and default order")
{
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    auto h = run_cli({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("verify") != std::string::npos);

    ::setenv("QZETA_DEFAULT_ORDER", "4", 1);
    auto r = run_cli({"expand", "Z(2)"});
    CHECK(r.code == 0);
    CHECK(r.out == "0 0\n1 1\n2 3\n3 4\n4 7\n");
    CHECK(run_cli({"expand", "Z(2)", "--order", "1"}).out == "0 0\n1 1\n");
    ::setenv("QZETA_DEFAULT_ORDER", "many", 1);
    CHECK(run_cli({"expand", "Z(2)"}).code == 2);
    ::unsetenv("QZETA_DEFAULT_ORDER");
    auto d = run_cli({"expand", "1"}).out;
    CHECK(std::count(d.begin(), d.end(), '\n') == 31);
}
