#include "ctcong/expr.hpp"

#include <cctype>
#include <sstream>

namespace ctcong {
namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    LaurentPoly run() {
        skip_ws();
        LaurentPoly v = expr();
        skip_ws();
        if (pos_ != s_.size())
            fail("end of input");
        return v;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& expected) {
        std::ostringstream msg;
        msg << "syntax error at position " << pos_ << ": expected " << expected;
        if (pos_ < s_.size())
            msg << ", found '" << s_[pos_] << "'";
        else
            msg << ", found end of input";
        throw ParseError(pos_, expected, msg.str());
    }

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }

    int peek() const { return pos_ < s_.size() ? static_cast<unsigned char>(s_[pos_]) : -1; }

    bool eat(char c) {
        if (peek() == c) { ++pos_; skip_ws(); return true; }
        return false;
    }

    LaurentPoly expr() {
        LaurentPoly v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }

    // juxtaposition multiplies, but only before a token that starts a base,
    // so "2-x" stays a subtraction
    bool starts_factor() const {
        int c = peek();
        return c == '(' || c == 'x' || std::isdigit(c);
    }

    LaurentPoly term() {
        LaurentPoly v = factor();
        for (;;) {
            if (eat('*')) {
                v = v * factor();
            } else if (eat('/')) {
                std::size_t at = pos_;
                LaurentPoly d = factor();
                if (d.is_zero())
                    throw Error("division-by-zero", "division by zero at position " + std::to_string(at));
                auto q = laurent_divide(v, d);
                if (!q)
                    throw Error("inexact-division",
                                "divisor at position " + std::to_string(at) +
                                    " is not a monomial and does not divide exactly");
                v = *q;
            } else if (starts_factor()) {
                v = v * factor();
            } else {
                return v;
            }
        }
    }

    LaurentPoly factor() {
        if (eat('-')) return -factor();
        LaurentPoly b = base();
        if (eat('^')) {
            long e = exponent();
            if (e >= 0) return lp_pow(b, static_cast<unsigned long>(e));
            if (b.is_zero())
                throw Error("division-by-zero", "zero raised to a negative power");
            if (!b.is_monomial())
                throw Error("inexact-division",
                            "negative power of a non-monomial is outside the Laurent ring");
            LaurentPoly inv = *laurent_divide(LaurentPoly::one(), b);
            return lp_pow(inv, static_cast<unsigned long>(-e));
        }
        return b;
    }

    LaurentPoly base() {
        int c = peek();
        if (c == '(') {
            ++pos_; skip_ws();
            LaurentPoly v = expr();
            if (!eat(')')) fail("')'");
            return v;
        }
        if (c == 'x') {
            ++pos_; skip_ws();
            return LaurentPoly::monomial(1, 1);
        }
        if (std::isdigit(c))
            return LaurentPoly::monomial(0, Rat(read_digits()));
        fail("a number, 'x', or '('");
    }

    long exponent() {
        if (eat('(')) {
            bool neg = eat('-');
            if (!std::isdigit(peek())) fail("an integer exponent");
            Int n = read_digits();
            if (!eat(')')) fail("')'");
            return to_long(neg ? Int(-n) : n);
        }
        bool neg = eat('-');
        if (!std::isdigit(peek())) fail("an integer exponent");
        Int n = read_digits();
        return to_long(neg ? Int(-n) : n);
    }

    long to_long(const Int& n) {
        if (!n.fits_slong_p()) fail("a smaller exponent");
        return n.get_si();
    }

    Int read_digits() {
        std::string d;
        while (std::isdigit(peek())) d += static_cast<char>(s_[pos_++]);
        skip_ws();
        return Int(d);
    }
};

// one term like "2*x^3", sign already taken by the caller
std::string term_str(const Rat& c, long e) {
    std::string out;
    if (e == 0) return c.get_str();
    if (c != 1) out = c.get_str() + "*";
    out += "x";
    if (e != 1) out += "^" + std::to_string(e);
    return out;
}

} // namespace

LaurentPoly parse_laurent(const std::string& text) {
    return Parser(text).run();
}

std::string pretty_print(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        if (first) {
            out += (c < 0) ? "-" + term_str(-c, e) : term_str(c, e);
            first = false;
        } else {
            out += (c < 0) ? " - " + term_str(-c, e) : " + " + term_str(c, e);
        }
    }
    return out;
}

std::string pretty_print(const Rat& q) { return q.get_str(); }

} // namespace ctcong
