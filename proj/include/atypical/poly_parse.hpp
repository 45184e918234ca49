#pragma once

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "atypical/poly.hpp"
#include "atypical/rational.hpp"

namespace atypical {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

// Recursive descent over:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := var | number | '(' expr ')'
//   number := uint | uint '/' uint | '(' a ('+'|'-') b 'i' ')'
// There is no division operator; '/' only occurs inside rational literals.
class PolyParser {
public:
    PolyParser(const std::string& text, const std::vector<std::string>& vars)
        : text_(text), nvars_(vars.size()) {
        for (std::size_t i = 0; i < vars.size(); ++i) index_[vars[i]] = i;
    }

    SparsePoly run() {
        SparsePoly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    SparsePoly expr() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = (text_[pos_++] == '-');
        SparsePoly acc = term();
        if (negate) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') return acc;
            ++pos_;
            SparsePoly t = term();
            acc = (c == '+') ? acc + t : acc - t;
        }
    }

    SparsePoly term() {
        SparsePoly acc = factor();
        for (;;) {
            skip_ws();
            if (peek() != '*') return acc;
            ++pos_;
            acc = acc * factor();
        }
    }

    SparsePoly factor() {
        SparsePoly b = base();
        skip_ws();
        if (peek() != '^') return b;
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        if (peek() == '-') fail("negative exponent");
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be an unsigned integer");
        unsigned long e = parse_uint();
        if (peek() == '/' || peek() == '.') throw ParseError("fractional exponent", at);
        if (e > 4096) throw ParseError("exponent too large", at);
        return b.pow(static_cast<unsigned>(e));
    }

    SparsePoly base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            GaussianRational lit;
            if (try_complex_literal(lit)) return SparsePoly::constant(nvars_, lit);
            ++pos_;
            SparsePoly inner = expr();
            skip_ws();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return SparsePoly::constant(nvars_, number());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t at = pos_;
            std::string name = identifier();
            auto it = index_.find(name);
            if (it == index_.end()) throw ParseError("unknown variable '" + name + "'", at);
            return SparsePoly::variable(nvars_, it->second);
        }
        fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
        return SparsePoly(nvars_);  // unreachable
    }

    // "(a+bi)", "(a-bi)", "(bi)"; a and b are unsigned int/rational literals
    // with an optional leading sign on a.  Rolls back when the shape differs.
    bool try_complex_literal(GaussianRational& out) {
        const std::size_t save = pos_;
        ++pos_;  // '('
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (text_[pos_++] == '-');
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            pos_ = save;
            return false;
        }
        Rational first = rational_literal();
        if (neg) first = -first;
        skip_ws();
        if (peek() == 'i') {
            ++pos_;
            skip_ws();
            if (peek() == ')') {
                ++pos_;
                out = GaussianRational(Rational(0), first);
                return true;
            }
            pos_ = save;
            return false;
        }
        if (peek() == '+' || peek() == '-') {
            bool negi = (text_[pos_++] == '-');
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) {
                pos_ = save;
                return false;
            }
            Rational second = rational_literal();
            if (negi) second = -second;
            skip_ws();
            if (peek() == 'i') {
                ++pos_;
                skip_ws();
                if (peek() == ')') {
                    ++pos_;
                    out = GaussianRational(first, second);
                    return true;
                }
            }
        }
        pos_ = save;
        return false;
    }

    GaussianRational number() { return GaussianRational(rational_literal()); }

    Rational rational_literal() {
        Rational p(parse_bigint());
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            const std::size_t at = pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
            BigInt q = parse_bigint();
            if (q == 0) throw ParseError("zero denominator", at);
            p /= Rational(q);
        }
        return p;
    }

    BigInt parse_bigint() {
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
        return BigInt(digits);
    }

    unsigned long parse_uint() {
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
        if (digits.size() > 9) fail("exponent too large");
        return std::stoul(digits);
    }

    std::string identifier() {
        std::string s;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') s += text_[pos_++];
        return s;
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    const std::string& text_;
    std::size_t pos_ = 0;
    std::size_t nvars_;
    std::map<std::string, std::size_t> index_;
};

}  // namespace detail

inline SparsePoly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
    return detail::PolyParser(text, vars).run();
}

inline PolyMap parse_map(const std::vector<std::string>& exprs, const std::vector<std::string>& vars) {
    std::vector<SparsePoly> comps;
    comps.reserve(exprs.size());
    for (const auto& e : exprs) comps.push_back(parse_poly(e, vars));
    return PolyMap(std::move(comps));
}

}  // namespace atypical
