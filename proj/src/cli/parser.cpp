#include <cctype>

#include "nbif/cli.hpp"

namespace nbif {

namespace {

constexpr long kMaxExponent = 65535;

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    BiPoly parse() {
        skip();
        if (pos_ == s_.size()) fail({"term"}, "empty polynomial");
        BiPoly r = expr();
        skip();
        if (pos_ != s_.size()) fail({"+", "-", "*", "^", "end of input"}, "unexpected character");
        return r;
    }

private:
    [[noreturn]] void fail(std::vector<std::string> expected, const std::string& what) const {
        throw ParseError(pos_, std::move(expected), what + " at offset " + std::to_string(pos_));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    // ASCII '-' or U+2212.
    bool take_minus() {
        if (peek() == '-') {
            ++pos_;
            return true;
        }
        if (s_.compare(pos_, 3, "\xE2\x88\x92") == 0) {
            pos_ += 3;
            return true;
        }
        return false;
    }

    bool starts_factor() const {
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == '(';
    }

    BiPoly expr() {
        skip();
        bool neg = take_minus();
        if (!neg && peek() == '+') ++pos_;
        BiPoly r = term();
        if (neg) r = -r;
        for (;;) {
            skip();
            if (peek() == '+') {
                ++pos_;
                r += term();
            } else if (take_minus()) {
                r -= term();
            } else {
                return r;
            }
        }
    }

    BiPoly term() {
        BiPoly r = factor();
        for (;;) {
            skip();
            if (peek() == '*') {
                ++pos_;
                r = r * factor();
            } else if (starts_factor()) {
                r = r * factor();
            } else {
                return r;
            }
        }
    }

    BiPoly factor() {
        BiPoly b = primary();
        for (;;) {
            skip();
            if (peek() != '^') return b;
            ++pos_;
            b = b.pow(static_cast<unsigned>(exponent()));
        }
    }

    BiPoly primary() {
        skip();
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return BiPoly::constant(rational());
        if (c == 'x' || c == 'y') {
            ++pos_;
            return c == 'x' ? BiPoly::x() : BiPoly::y();
        }
        if (c == '(') {
            ++pos_;
            BiPoly r = expr();
            skip();
            if (peek() != ')') fail({")"}, "unbalanced parenthesis");
            ++pos_;
            return r;
        }
        fail({"number", "x", "y", "("}, "expected a factor");
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    Rational rational() {
        Integer num(digits());
        const std::size_t save = pos_;
        skip();
        if (peek() != '/') {
            pos_ = save;
            return Rational(num);
        }
        ++pos_;
        skip();
        const std::string d = digits();
        if (d.empty()) fail({"positive integer"}, "missing denominator");
        Integer den(d);
        if (sgn(den) == 0) fail({"positive integer"}, "zero denominator");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    long exponent() {
        skip();
        const std::size_t at = pos_;
        if (take_minus()) throw NegativeExponent(at);
        const bool paren = peek() == '(';
        if (paren) {
            ++pos_;
            skip();
            const std::size_t inner = pos_;
            if (take_minus()) throw NegativeExponent(inner);
        }
        const std::string d = digits();
        if (d.empty()) fail({"nat"}, "missing exponent");
        if (d.size() > 9 || std::stol(d) > kMaxExponent) fail({"nat"}, "exponent too large");
        if (paren) {
            skip();
            if (peek() != ')') fail({")"}, "unbalanced parenthesis");
            ++pos_;
        }
        return std::stol(d);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_poly(const std::string& text) { return Parser(text).parse(); }

}  // namespace nbif
