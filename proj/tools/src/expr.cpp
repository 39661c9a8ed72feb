#include "qzeta_cli/expr.hpp"

#include "qzeta/nested_sum.hpp"
#include "qzeta/zeta.hpp"

#include <cctype>
#include <climits>

namespace qzeta::cli {

bool operator==(const Expr& a, const Expr& b)
{
    return a.kind == b.kind && a.value == b.value && a.indices == b.indices && a.exponent == b.exponent &&
           a.name == b.name && a.args == b.args;
}

namespace {

std::string format_error(int line, int column, const std::string& message, const std::set<std::string>& expected)
{
    std::string s = "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
    if (!expected.empty()) {
        s += "; expected one of:";
        for (const auto& e : expected) s += " " + e;
    }
    return s;
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& message, std::set<std::string> expected)
    : std::runtime_error(format_error(line, column, message, expected)),
      line_(line),
      column_(column),
      message_(message),
      expected_(std::move(expected))
{
}

namespace {

enum class Tok { Int, Ident, String, Symbol, End };

struct Token {
    Tok kind;
    std::string text;
    int line, column;
};

std::vector<Token> lex(const std::string& src)
{
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        unsigned char c = static_cast<unsigned char>(src[i]);
        if (std::isspace(c)) {
            advance(1);
            continue;
        }
        int l = line, cl = col;
        if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Tok::Int, src.substr(i, j - i), l, cl});
            advance(j - i);
        } else if (std::isalpha(c) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            out.push_back({Tok::Ident, src.substr(i, j - i), l, cl});
            advance(j - i);
        } else if (c == '"') {
            std::size_t j = i + 1;
            while (j < src.size() && src[j] != '"' && src[j] != '\n') ++j;
            if (j >= src.size() || src[j] != '"') throw ParseError(l, cl, "unterminated string");
            out.push_back({Tok::String, src.substr(i + 1, j - i - 1), l, cl});
            advance(j + 1 - i);
        } else if (std::string("+-*/^()[],").find(static_cast<char>(c)) != std::string::npos) {
            out.push_back({Tok::Symbol, std::string(1, static_cast<char>(c)), l, cl});
            advance(1);
        } else {
            throw ParseError(l, cl, std::string("unexpected character '") + static_cast<char>(c) + "'");
        }
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

Expr node(Expr::Kind k, std::vector<Expr> args = {})
{
    Expr e;
    e.kind = k;
    e.args = std::move(args);
    return e;
}

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    Expr parse_all()
    {
        Expr e = expr();
        if (peek().kind != Tok::End) fail("unexpected input", {"+", "-", "*", "/", "^", "end of input"});
        return e;
    }

private:
    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    bool is_sym(const char* s, std::size_t k = 0) const { return peek(k).kind == Tok::Symbol && peek(k).text == s; }
    Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(const std::string& msg, std::set<std::string> expected) const
    {
        const Token& t = peek();
        std::string m = msg;
        if (t.kind == Tok::End)
            m += " at end of input";
        else
            m += " '" + t.text + "'";
        throw ParseError(t.line, t.column, m, std::move(expected));
    }

    void expect_sym(const char* s)
    {
        if (!is_sym(s)) fail("unexpected token", {std::string("'") + s + "'"});
        take();
    }

    long integer(bool allow_sign, const std::string& what)
    {
        bool neg = false;
        if (allow_sign && is_sym("-")) {
            take();
            neg = true;
        }
        if (peek().kind != Tok::Int) fail("unexpected token", {what});
        const Token t = take();
        if (t.text.size() > 9) throw ParseError(t.line, t.column, what + " out of range");
        long v = std::stol(t.text);
        return neg ? -v : v;
    }

    Expr expr()
    {
        Expr lhs = term();
        while (is_sym("+") || is_sym("-")) {
            auto k = take().text == "+" ? Expr::Kind::Add : Expr::Kind::Sub;
            lhs = node(k, {std::move(lhs), term()});
        }
        return lhs;
    }

    Expr term()
    {
        Expr lhs = unary();
        while (is_sym("*") || is_sym("/")) {
            auto k = take().text == "*" ? Expr::Kind::Mul : Expr::Kind::Div;
            lhs = node(k, {std::move(lhs), unary()});
        }
        return lhs;
    }

    Expr unary()
    {
        if (is_sym("-")) {
            take();
            return node(Expr::Kind::Neg, {unary()});
        }
        return power();
    }

    Expr power()
    {
        Expr base = primary();
        if (is_sym("^")) {
            take();
            Expr p = node(Expr::Kind::Pow, {std::move(base)});
            p.exponent = integer(true, "integer exponent");
            return p;
        }
        return base;
    }

    std::vector<int> index_list(const char* close, int min, const std::string& domain_msg)
    {
        std::vector<int> idx;
        for (;;) {
            const Token& t = peek();
            long v = integer(false, "index");
            if (v < min) throw ParseError(t.line, t.column, domain_msg);
            idx.push_back(static_cast<int>(v));
            if (is_sym(",")) {
                take();
                continue;
            }
            if (!is_sym(close)) fail("unexpected token", {"','", std::string("'") + close + "'"});
            take();
            return idx;
        }
    }

    Expr primary()
    {
        const Token& t = peek();
        if (t.kind == Tok::Int) {
            Expr e = node(Expr::Kind::Literal);
            Integer num(take().text);
            Integer den = 1;
            if (is_sym("/") && peek(1).kind == Tok::Int) {
                take();
                const Token d = take();
                den = Integer(d.text);
                if (den == 0) throw ParseError(d.line, d.column, "zero denominator");
            }
            e.value = make_rational(num, den);
            return e;
        }
        if (is_sym("(")) {
            take();
            Expr e = expr();
            expect_sym(")");
            return e;
        }
        if (t.kind == Tok::Ident) {
            const Token id = take();
            if (id.text == "Z") {
                expect_sym("(");
                Expr e = node(Expr::Kind::Zeta);
                e.indices = index_list(")", 2, "Okounkov index must be ≥ 2");
                return e;
            }
            if (id.text == "B") {
                expect_sym("[");
                Expr e = node(Expr::Kind::Bracket);
                e.indices = index_list("]", 1, "bracket index must be ≥ 1");
                return e;
            }
            if (id.text == "G") {
                expect_sym("(");
                const Token& w = peek();
                Expr e = node(Expr::Kind::Eisenstein);
                long weight = integer(false, "weight");
                if (weight < 2 || weight % 2 != 0)
                    throw ParseError(w.line, w.column, "Eisenstein weight must be an even integer ≥ 2");
                e.indices = {static_cast<int>(weight)};
                expect_sym(")");
                return e;
            }
            if (id.text == "EulerPow") {
                expect_sym("(");
                Expr e = node(Expr::Kind::EulerPow);
                e.exponent = integer(true, "integer exponent");
                expect_sym(")");
                return e;
            }
            if (id.text == "D") {
                expect_sym("(");
                Expr e = node(Expr::Kind::Derivative, {expr()});
                expect_sym(")");
                return e;
            }
            if (id.text == "sum") {
                expect_sym("(");
                if (peek().kind != Tok::String) fail("unexpected token", {"string"});
                const Token s = take();
                const auto& cat = builtin_sums();
                if (cat.find(s.text) == cat.end()) throw ParseError(s.line, s.column, "unknown named sum '" + s.text + "'");
                Expr e = node(Expr::Kind::NamedSum);
                e.name = s.text;
                expect_sym(")");
                return e;
            }
            throw ParseError(id.line, id.column, "unknown generator '" + id.text + "'",
                             {"Z", "B", "G", "EulerPow", "D", "sum"});
        }
        fail("unexpected token", {"number", "'('", "'-'", "Z", "B", "G", "EulerPow", "D", "sum"});
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

// Binding strength of the node as printed.
int level(const Expr& e)
{
    switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    default: return 5;
    }
}

std::string join(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string wrap(const Expr& e, int min_level)
{
    std::string s = print(e);
    return level(e) < min_level ? "(" + s + ")" : s;
}

}  // namespace

Expr parse(const std::string& text) { return Parser(text).parse_all(); }

std::string print(const Expr& e)
{
    using K = Expr::Kind;
    switch (e.kind) {
    case K::Literal: return to_string(e.value);
    case K::Zeta: return "Z(" + join(e.indices) + ")";
    case K::Bracket: return "B[" + join(e.indices) + "]";
    case K::Eisenstein: return "G(" + std::to_string(e.indices.at(0)) + ")";
    case K::EulerPow: return "EulerPow(" + std::to_string(e.exponent) + ")";
    case K::Derivative: return "D(" + print(e.args.at(0)) + ")";
    case K::NamedSum: return "sum(\"" + e.name + "\")";
    case K::Neg: return "-" + wrap(e.args.at(0), 3);
    case K::Add: return wrap(e.args.at(0), 1) + " + " + wrap(e.args.at(1), 2);
    case K::Sub: return wrap(e.args.at(0), 1) + " - " + wrap(e.args.at(1), 2);
    case K::Mul: return wrap(e.args.at(0), 2) + "*" + wrap(e.args.at(1), 3);
    case K::Div: {
        // A right operand starting with a digit would merge with the slash into one p/q literal.
        std::string r = wrap(e.args.at(1), 3);
        if (std::isdigit(static_cast<unsigned char>(r.front()))) r = "(" + r + ")";
        return wrap(e.args.at(0), 2) + " / " + r;
    }
    case K::Pow: {
        const Expr& base = e.args.at(0);
        bool atomic = level(base) == 5 && !(base.kind == K::Literal && base.value.get_den() != 1);
        return (atomic ? print(base) : "(" + print(base) + ")") + "^" + std::to_string(e.exponent);
    }
    }
    return "";
}

RSeries eval(const Expr& e, int N)
{
    using K = Expr::Kind;
    switch (e.kind) {
    case K::Literal: return RSeries::constant(e.value, N);
    case K::Zeta: return okounkov_z(e.indices, N);
    case K::Bracket: return bracket(e.indices, N);
    case K::Eisenstein: return eisenstein(e.indices.at(0), N);
    case K::EulerPow: return euler_pow(e.exponent, N);
    case K::Derivative: return eval(e.args.at(0), N).q_derivative();
    case K::NamedSum: return eval_builtin(e.name, N);
    case K::Neg: return -eval(e.args.at(0), N);
    case K::Add: return eval(e.args.at(0), N) + eval(e.args.at(1), N);
    case K::Sub: return eval(e.args.at(0), N) - eval(e.args.at(1), N);
    case K::Mul: return eval(e.args.at(0), N) * eval(e.args.at(1), N);
    case K::Div: {
        RSeries d = eval(e.args.at(1), N);
        if (sgn(d[0]) == 0) throw EvalError("division by a series with zero constant term");
        return eval(e.args.at(0), N) * d.inverse();
    }
    case K::Pow: {
        RSeries b = eval(e.args.at(0), N);
        if (e.exponent < 0 && sgn(b[0]) == 0) throw EvalError("negative power of a series with zero constant term");
        return b.pow(e.exponent);
    }
    }
    throw EvalError("unknown expression node");
}

}  // namespace qzeta::cli
