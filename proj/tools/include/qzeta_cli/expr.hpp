#pragma once

#include "qzeta/series.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qzeta::cli {

struct Expr {
    enum class Kind {
        Literal,     // value >= 0; signs are Neg nodes
        Zeta,        // Z(indices...)
        Bracket,     // B[indices...]
        Eisenstein,  // G(indices[0])
        EulerPow,    // EulerPow(exponent)
        Derivative,  // D(args[0]) = q d/dq
        NamedSum,    // sum("name")
        Neg,
        Add,
        Sub,
        Mul,
        Div,
        Pow,  // args[0] ^ exponent
    };

    Kind kind = Kind::Literal;
    Rational value;
    std::vector<int> indices;
    long exponent = 0;
    std::string name;
    std::vector<Expr> args;

    friend bool operator==(const Expr& a, const Expr& b);
    friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message, std::set<std::string> expected = {});

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& message() const { return message_; }
    const std::set<std::string>& expected() const { return expected_; }

private:
    int line_, column_;
    std::string message_;
    std::set<std::string> expected_;
};

class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Precedence ^ > unary - > * / > + -; a p/q literal is atomic.
Expr parse(const std::string& text);

// Minimal parentheses; parse(print(e)) == e.
std::string print(const Expr& e);

RSeries eval(const Expr& e, int N);

}  // namespace qzeta::cli
