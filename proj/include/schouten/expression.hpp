#pragma once

#include "schouten/errors.hpp"
#include "schouten/scalar_field.hpp"

#include <cctype>
#include <string>

namespace schouten {

/// Recursive-descent parser for the problem-file expression grammar:
/// coordinate names, integer literals, rationals spelled with '/', the
/// operators + - * / ^ and parentheses.  Whitespace is insignificant.
/// Results are exact rational-function fields on the given chart.
class ExpressionParser {
  public:
    ExpressionParser(std::string text, ChartPtr chart)
        : text_(std::move(text)), chart_(std::move(chart)) {}

    ScalarField parse() {
        RatFn r = parse_expr();
        skip_ws();
        if (pos_ < text_.size()) fail("trailing input");
        return ScalarField(chart_, r);
    }

  private:
    RatFn parse_expr() {
        RatFn acc = parse_term();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                acc = acc + parse_term();
            } else if (peek() == '-') {
                ++pos_;
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    RatFn parse_term() {
        RatFn acc = parse_unary();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = acc * parse_unary();
            } else if (peek() == '/') {
                ++pos_;
                RatFn d = parse_unary();
                if (d.is_zero()) fail("division by zero");
                acc = acc / d;
            } else {
                return acc;
            }
        }
    }

    RatFn parse_unary() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            return -parse_unary();
        }
        if (peek() == '+') {
            ++pos_;
            return parse_unary();
        }
        return parse_power();
    }

    RatFn parse_power() {
        RatFn base = parse_atom();
        skip_ws();
        if (peek() != '^') return base;
        ++pos_;
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer exponent");
        unsigned e = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            e = e * 10u + static_cast<unsigned>(peek() - '0');
            ++pos_;
        }
        RatFn p = RatFn::from_poly(base.num().pow(e)) / RatFn::from_poly(base.den().pow(e));
        if (!neg) return p;
        if (p.is_zero()) fail("zero raised to a negative power");
        return RatFn::constant(chart_->dim(), Q(1)) / p;
    }

    RatFn parse_atom() {
        skip_ws();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            RatFn r = parse_expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Z n(0);
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                n = n * 10 + (peek() - '0');
                ++pos_;
            }
            return RatFn::constant(chart_->dim(), Q(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
                name.push_back(peek());
                ++pos_;
            }
            const int idx = chart_->index_of(name);
            if (idx < 0) throw UnknownCoordinate(name);
            return RatFn::variable(chart_->dim(), idx);
        }
        fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c +
                                                         "'");
        return RatFn(chart_->dim());  // unreachable
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                col_base_ = pos_ + 1;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(line_, static_cast<int>(pos_ - col_base_) + 1, msg);
    }

    std::string text_;
    ChartPtr chart_;
    std::size_t pos_ = 0;
    int line_ = 1;
    std::size_t col_base_ = 0;
};

inline ScalarField parse_field(const std::string& text, const ChartPtr& chart) {
    return ExpressionParser(text, chart).parse();
}

}  // namespace schouten
