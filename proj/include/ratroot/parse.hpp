// Text grammar for scalars, rational functions and matrices:
//   entry  := expression over +, -, *, /, ^, parentheses
//   atom   := integer | decimal | 'i' | 'l' | UTF-8 lambda
//   matrix := row (';' row)*   row := entry (',' entry)*
// Integer and ratio literals parse exactly on the exact backend.
#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include "ratmat.hpp"

namespace ratroot {

struct ParseError : std::runtime_error {
    size_t line, col;
    ParseError(const std::string& msg, size_t line_, size_t col_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", col " +
                             std::to_string(col_) + ")"),
          line(line_),
          col(col_) {}
};

template <class F>
class Parser {
  public:
    explicit Parser(std::string text) : s_(std::move(text)) {}

    RatFun<F> parse_entry() {
        RatFun<F> r = expr();
        skip_ws();
        if (!at_end()) fail("trailing input after expression");
        return r;
    }

    F parse_scalar() {
        RatFun<F> r = expr();
        skip_ws();
        if (!at_end()) fail("trailing input after expression");
        if (!r.is_constant()) fail("expected a constant");
        return r.is_zero() ? FieldOps<F>::zero() : r.eval(FieldOps<F>::zero());
    }

    RatMat<F> parse_matrix() {
        std::vector<std::vector<RatFun<F>>> rows;
        rows.emplace_back();
        for (;;) {
            rows.back().push_back(expr());
            skip_ws();
            if (at_end()) break;
            char c = s_[pos_];
            if (c == ',') {
                advance();
            } else if (c == ';') {
                advance();
                skip_ws();
                if (at_end()) break;  // tolerate a trailing separator
                rows.emplace_back();
            } else {
                fail("expected ',' or ';' between entries");
            }
        }
        size_t n = rows[0].size();
        RatMat<F> M(rows.size(), n);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != n) fail("rows have different lengths");
            for (size_t j = 0; j < n; ++j) M(i, j) = rows[i][j];
        }
        return M;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

    bool at_end() const { return pos_ >= s_.size(); }
    void advance() {
        if (at_end()) return;
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
    }
    bool peek_is(char c) {
        skip_ws();
        return !at_end() && s_[pos_] == c;
    }
    bool consume(char c) {
        if (!peek_is(c)) return false;
        advance();
        return true;
    }

    RatFun<F> expr() {
        RatFun<F> v = consume('-') ? -term() : (consume('+'), term());
        for (;;) {
            if (consume('+'))
                v = v + term();
            else if (consume('-'))
                v = v - term();
            else
                return v;
        }
    }

    RatFun<F> term() {
        RatFun<F> v = power();
        for (;;) {
            if (consume('*')) {
                v = v * power();
            } else if (consume('/')) {
                RatFun<F> d = power();
                if (d.is_zero()) fail("division by zero");
                v = v / d;
            } else if (starts_atom()) {
                v = v * power();  // implicit multiplication, e.g. 2l
            } else {
                return v;
            }
        }
    }

    bool starts_atom() {
        skip_ws();
        if (at_end()) return false;
        char c = s_[pos_];
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || is_var_start();
    }

    bool is_var_start() const {
        if (at_end()) return false;
        char c = s_[pos_];
        if (c == 'l' || c == 'i' || c == 'I') return true;
        // UTF-8 lambda: 0xCE 0xBB
        return static_cast<unsigned char>(c) == 0xCE && pos_ + 1 < s_.size() &&
               static_cast<unsigned char>(s_[pos_ + 1]) == 0xBB;
    }

    RatFun<F> power() {
        RatFun<F> base = unary();
        if (consume('^')) {
            skip_ws();
            bool neg = consume('-');
            long e = integer_literal();
            RatFun<F> r = RatFun<F>::one();
            for (long t = 0; t < e; ++t) r = r * base;
            if (neg) r = r.inverse();
            return r;
        }
        return base;
    }

    RatFun<F> unary() { return consume('-') ? -atom() : atom(); }

    RatFun<F> atom() {
        skip_ws();
        if (at_end()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            advance();
            RatFun<F> v = expr();
            if (!consume(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (c == 'l' || static_cast<unsigned char>(c) == 0xCE) {
            advance();
            if (static_cast<unsigned char>(c) == 0xCE) advance();  // second lambda byte
            return RatFun<F>::variable();
        }
        if (c == 'i' || c == 'I') {
            advance();
            return imaginary_unit();
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    RatFun<F> imaginary_unit() {
        if constexpr (FieldOps<F>::exact) {
            fail("imaginary literals are not available on the exact backend");
        } else {
            return RatFun<F>(Poly<F>(F(0.0, 1.0)));
        }
    }

    long integer_literal() {
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected an integer");
        long v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            advance();
        }
        return v;
    }

    RatFun<F> number() {
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            digits += s_[pos_];
            advance();
        }
        std::string frac;
        if (!at_end() && s_[pos_] == '.') {
            advance();
            while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                frac += s_[pos_];
                advance();
            }
        }
        F value = FieldOps<F>::zero();
        for (char d : digits) value = value * FieldOps<F>::from_int(10) + FieldOps<F>::from_int(d - '0');
        if (!frac.empty()) {
            F num = FieldOps<F>::zero(), den = FieldOps<F>::one();
            for (char d : frac) {
                num = num * FieldOps<F>::from_int(10) + FieldOps<F>::from_int(d - '0');
                den = den * FieldOps<F>::from_int(10);
            }
            value = value + num / den;  // exact decimal expansion
        }
        return RatFun<F>(Poly<F>(value));
    }

    std::string s_;
    size_t pos_ = 0;
    size_t line_ = 1, col_ = 1;
};

template <class F>
RatFun<F> parse_ratfun(const std::string& text) {
    return Parser<F>(text).parse_entry();
}

template <class F>
RatMat<F> parse_ratmat(const std::string& text) {
    return Parser<F>(text).parse_matrix();
}

template <class F>
F parse_scalar(const std::string& text) {
    return Parser<F>(text).parse_scalar();
}

}  // namespace ratroot
