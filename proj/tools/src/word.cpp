#include "qzeta_cli/word.hpp"

#include "qzeta_cli/expr.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace qzeta::cli {

namespace {

class WordParser {
public:
    WordParser(const std::string& text, const SurfaceModel& surface) : s_(text), surface_(surface) {}

    std::vector<OpSum> parse()
    {
        std::vector<OpSum> out;
        out.push_back(factor());
        for (;;) {
            skip_ws();
            if (i_ == s_.size()) return out;
            if (s_[i_] != '*') fail("unexpected character", {"'*'", "end of input"});
            ++i_;
            out.push_back(factor());
        }
    }

private:
    void skip_ws()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    [[noreturn]] void fail(const std::string& msg, std::set<std::string> expected = {}) const
    {
        std::string m = msg;
        if (i_ < s_.size()) m += std::string(" '") + s_[i_] + "'";
        else m += " at end of input";
        throw ParseError(1, static_cast<int>(i_) + 1, m, std::move(expected));
    }

    void expect(char c)
    {
        skip_ws();
        if (i_ >= s_.size() || s_[i_] != c) fail("unexpected character", {std::string("'") + c + "'"});
        ++i_;
    }

    int part()
    {
        skip_ws();
        std::size_t start = i_;
        bool neg = false;
        if (i_ < s_.size() && s_[i_] == '-') {
            neg = true;
            ++i_;
        }
        std::size_t d = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (d == i_) fail("unexpected character", {"integer part"});
        if (i_ - d > 6) throw ParseError(1, static_cast<int>(start) + 1, "part out of range");
        int v = std::stoi(s_.substr(d, i_ - d));
        if (v == 0) throw ParseError(1, static_cast<int>(start) + 1, "a_0 does not occur");
        return neg ? -v : v;
    }

    OpSum factor()
    {
        skip_ws();
        if (i_ >= s_.size() || s_[i_] != 'a') fail("unexpected character", {"'a'"});
        ++i_;
        expect('[');
        std::vector<int> parts{part()};
        for (;;) {
            skip_ws();
            if (i_ < s_.size() && s_[i_] == ',') {
                ++i_;
                parts.push_back(part());
                continue;
            }
            break;
        }
        expect(']');
        expect('(');
        skip_ws();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
        std::string name = s_.substr(start, i_ - start);
        CohClass cls;
        try {
            cls = surface_.named(name);
        } catch (const std::invalid_argument&) {
            i_ = start;
            std::set<std::string> known{"1X", "K", "e", "pt"};
            for (std::size_t k = 1; k < surface_.divisors().size(); ++k) known.insert(surface_.divisors()[k]);
            throw ParseError(1, static_cast<int>(start) + 1, "unknown class '" + name + "'", known);
        }
        expect(')');
        bool normalized = false;
        skip_ws();
        if (i_ < s_.size() && s_[i_] == '/') {
            ++i_;
            expect('!');
            normalized = true;
        }

        std::map<int, int> mult;
        for (int p : parts) ++mult[p];
        DecoratedOp op{GenPartition::from_multiplicities(mult), cls, normalized};
        if (std::is_sorted(parts.begin(), parts.end())) return OpSum{{Rational(1), op}};
        return canonicalize(parts, cls, op.normalization(), surface_);
    }

    const std::string& s_;
    const SurfaceModel& surface_;
    std::size_t i_ = 0;
};

}  // namespace

std::vector<OpSum> parse_word(const std::string& text, const SurfaceModel& surface)
{
    return WordParser(text, surface).parse();
}

}  // namespace qzeta::cli
