// Recursive-descent parser for the scalar/polynomial text grammar:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' uint)?
//   base   := rational | 'cosh(t)' | 'sinh(t)' | 'cos(u)' | 'sin(u)'
//           | variable | '(' expr ')' | '-' base
//   rational := int ('/' uint)?
//
// Whitespace is insignificant. Variables x1..x{n}, y1..y{n} are only accepted
// when parsing polynomials (y* only in cartesian mode). Errors carry the byte
// position and what was expected.
#pragma once

#include "lorinv/poly.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace lorinv {

class parse_error : public std::runtime_error {
  public:
    parse_error(std::size_t position, const std::string& expected)
        : std::runtime_error("parse error at position " + std::to_string(position) +
                             ": expected " + expected),
          position_(position),
          expected_(expected) {}
    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

  private:
    std::size_t position_;
    std::string expected_;
};

namespace detail {

class ExprParser {
  public:
    // nvars = 0 parses pure scalar expressions (variables rejected).
    ExprParser(std::string_view text, unsigned nvars, bool cartesian)
        : text_(text), nvars_(nvars), cartesian_(cartesian) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw parse_error(pos_, "end of input or operator");
        return p;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
    unsigned nvars_;
    bool cartesian_;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool consume_word(std::string_view w) {
        skip_ws();
        if (text_.substr(pos_, w.size()) == w) {
            pos_ += w.size();
            return true;
        }
        return false;
    }

    Poly expr() {
        Poly acc = term();
        for (;;) {
            if (consume('+'))
                acc += term();
            else if (consume('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            if (consume('*')) {
                acc *= factor();
            } else if (consume('/')) {
                std::size_t at = pos_;
                Poly d = factor();
                if (!d.is_constant())
                    throw parse_error(at, "constant divisor (division by a polynomial)");
                Scalar dv = d.is_zero() ? Scalar(0L) : d.terms().begin()->second;
                if (dv.is_zero()) throw parse_error(at, "nonzero divisor");
                acc = dv.inverse() * acc;
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        Poly b = base();
        if (consume('^')) {
            unsigned e = parse_uint();
            return b.pow(e);
        }
        return b;
    }

    Poly base() {
        skip_ws();
        if (pos_ >= text_.size()) throw parse_error(pos_, "number, symbol, variable or '('");
        char c = text_[pos_];
        if (c == '-') {
            ++pos_;
            return -base();
        }
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!consume(')')) throw parse_error(pos_, "')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
        if (consume_word("cosh(t)")) return Poly::constant(nvars_, Scalar::cosh_t());
        if (consume_word("sinh(t)")) return Poly::constant(nvars_, Scalar::sinh_t());
        if (consume_word("cos(u)")) return Poly::constant(nvars_, Scalar::cos_u());
        if (consume_word("sin(u)")) return Poly::constant(nvars_, Scalar::sin_u());
        if (c == 'x' || c == 'y') return variable_ref();
        throw parse_error(pos_, "number, cosh(t), sinh(t), cos(u), sin(u), variable or '('");
    }

    Poly variable_ref() {
        std::size_t at = pos_;
        char kind = text_[pos_++];
        if (nvars_ == 0) throw parse_error(at, "scalar expression (no variables allowed here)");
        unsigned idx = parse_uint();
        unsigned half = nvars_ / 2;
        unsigned limit = cartesian_ ? half : nvars_;
        if (kind == 'y' && !cartesian_)
            throw parse_error(at, "x-variable (y-variables need a cartesian context)");
        if (idx < 1 || idx > limit)
            throw parse_error(at, "variable index between 1 and " + std::to_string(limit));
        unsigned v = (kind == 'y') ? half + idx - 1 : idx - 1;
        return Poly::variable(nvars_, v);
    }

    Poly rational_literal() {
        BigInt num = parse_bigint();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            // lookahead: only treat '/' as part of the literal when a digit
            // follows; otherwise it is the division operator
            std::size_t save = pos_;
            ++pos_;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                BigInt den = parse_bigint();
                if (den == 0) throw parse_error(save + 1, "nonzero denominator");
                return Poly::constant(nvars_, Scalar(make_rational(num, den)));
            }
            pos_ = save;
        }
        return Poly::constant(nvars_, Scalar(Rational(num)));
    }

    BigInt parse_bigint() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw parse_error(start, "digit");
        return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
    }

    unsigned parse_uint() {
        BigInt b = parse_bigint();
        if (b > 1000000) throw parse_error(pos_, "exponent at most 10^6");
        return static_cast<unsigned>(b.get_ui());
    }
};

}  // namespace detail

inline Scalar parse_scalar(std::string_view text) {
    Poly p = detail::ExprParser(text, 0, false).parse();
    if (p.is_zero()) return Scalar(0L);
    return p.terms().begin()->second;
}

inline Poly parse_poly(std::string_view text, unsigned nvars, bool cartesian = false) {
    return detail::ExprParser(text, nvars, cartesian).parse();
}

}  // namespace lorinv
