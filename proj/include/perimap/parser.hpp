#pragma once

#include <cctype>
#include <string>

#include "perimap/ratfunc.hpp"

namespace perimap {

// Recursive-descent / precedence-climbing parser for the expression grammar:
// integers, identifiers, + - * / ^ (nonnegative integer exponent), parens.
// parse(print(f)) == f on canonical forms.
namespace detail {

class ExprParser {
  public:
    ExprParser(const std::string& src, VarTablePtr vars) : src_(src), vars_(std::move(vars)) {}

    RatFunc run() {
        RatFunc e = parse_expr(0);
        skip_ws();
        if (pos_ != src_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

  private:
    // binding powers: + - (10), * / (20), ^ (30, right-assoc), unary - (25)
    RatFunc parse_expr(int min_bp) {
        RatFunc lhs = parse_prefix();
        while (true) {
            skip_ws();
            if (pos_ >= src_.size()) break;
            char op = src_[pos_];
            int bp = op == '+' || op == '-' ? 10 : op == '*' || op == '/' ? 20 : op == '^' ? 30 : -1;
            if (bp < min_bp || bp == -1) break;
            ++pos_;
            if (op == '^') {
                long e = parse_exponent();
                lhs = lhs.pow(e);
                continue;
            }
            RatFunc rhs = parse_expr(bp + 1);
            switch (op) {
                case '+': lhs += rhs; break;
                case '-': lhs -= rhs; break;
                case '*': lhs *= rhs; break;
                case '/':
                    if (rhs.is_zero())
                        throw ParseError("division by the zero polynomial", pos_);
                    lhs /= rhs;
                    break;
            }
        }
        return lhs;
    }

    RatFunc parse_prefix() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of expression", pos_);
        char c = src_[pos_];
        if (c == '-') {
            ++pos_;
            return -parse_expr(25);
        }
        if (c == '+') {
            ++pos_;
            return parse_expr(25);
        }
        if (c == '(') {
            std::size_t open = pos_++;
            RatFunc e = parse_expr(0);
            skip_ws();
            if (pos_ >= src_.size() || src_[pos_] != ')')
                throw ParseError("unbalanced parenthesis", open);
            ++pos_;
            return maybe_power(std::move(e));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            Rat v = rat_from_decimal(src_.substr(start, pos_ - start));
            return maybe_power(RatFunc::constant(vars_, v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            std::string name = src_.substr(start, pos_ - start);
            if (vars_->index_of(name) < 0) throw ParseError("unknown identifier '" + name + "'", start);
            return maybe_power(RatFunc::var(vars_, name));
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    // ^ binds tighter than unary minus and is right-associative with literal
    // nonnegative integer exponents only
    RatFunc maybe_power(RatFunc base) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == '^') {
            ++pos_;
            long e = parse_exponent();
            return base.pow(e);
        }
        return base;
    }

    long parse_exponent() {
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            throw ParseError("exponent must be a nonnegative integer literal", pos_);
        long e = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            e = e * 10 + (src_[pos_] - '0');
            if (e > 100000) throw ParseError("exponent too large", pos_);
            ++pos_;
        }
        return e;
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    const std::string& src_;
    VarTablePtr vars_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline RatFunc parse_ratfunc(const std::string& expr, const VarTablePtr& vars) {
    return detail::ExprParser(expr, vars).run();
}

inline MPoly parse_poly(const std::string& expr, const VarTablePtr& vars) {
    RatFunc f = parse_ratfunc(expr, vars);
    if (!f.is_polynomial()) throw ParseError("expected a polynomial, got a proper quotient", 0);
    return f.num() * (Rat(1) / f.den().constant_value());
}

}  // namespace perimap
