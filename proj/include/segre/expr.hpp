#pragma once

// Recursive-descent evaluator for ring-element expressions.  The accepted
// grammar extends the canonical serialization with parentheses and arbitrary
// products/powers of subexpressions:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := atom ('^' uint)*
//   atom    := rational | variable | '(' expr ')'
//   rational:= uint ('/' uint)?          (slash only as a constant literal)
//   variable:= 't' uint                  (t1..ts for an s-factor ring)

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "segre/errors.hpp"
#include "segre/intersection_ring.hpp"
#include "segre/rational.hpp"

namespace segre {

namespace detail {

class ExprParser {
public:
    ExprParser(const RingSpec& spec, std::string_view src) : spec_(spec), src_(src) {}

    RingElement parse() {
        RingElement value = parse_expr();
        skip_space();
        if (pos_ != src_.size()) {
            throw parse_error("unexpected trailing input", pos_);
        }
        return value;
    }

private:
    RingElement parse_expr() {
        RingElement value = parse_term();
        while (true) {
            skip_space();
            if (accept('+')) {
                value = add(value, parse_term());
            } else if (accept('-')) {
                value = sub(value, parse_term());
            } else {
                return value;
            }
        }
    }

    RingElement parse_term() {
        RingElement value = parse_unary();
        while (true) {
            skip_space();
            if (accept('*')) {
                value = mul(value, parse_unary());
            } else {
                return value;
            }
        }
    }

    RingElement parse_unary() {
        skip_space();
        if (accept('-')) return scale(-1, parse_unary());
        return parse_power();
    }

    RingElement parse_power() {
        RingElement value = parse_atom();
        while (true) {
            skip_space();
            if (!accept('^')) return value;
            skip_space();
            std::size_t at = pos_;
            unsigned long long k = parse_uint_bounded(kMaxExponent, "exponent");
            (void)at;
            value = pow(value, k);
        }
    }

    RingElement parse_atom() {
        skip_space();
        if (pos_ >= src_.size()) {
            throw parse_error("unexpected end of input", pos_);
        }
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            RingElement value = parse_expr();
            skip_space();
            if (!accept(')')) {
                throw parse_error("expected ')'", pos_);
            }
            return value;
        }
        if (c == 't') return parse_variable();
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }

    RingElement parse_variable() {
        std::size_t at = pos_;
        ++pos_;  // consume 't'
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            throw parse_error("expected a factor index after 't'", pos_);
        }
        unsigned long long index = parse_uint_bounded(1000, "variable index");
        if (index < 1 || index > spec_.arity()) {
            throw parse_error("variable t" + std::to_string(index) + " is not one of t1..t" +
                                  std::to_string(spec_.arity()),
                              at);
        }
        return RingElement::generator(spec_, static_cast<std::size_t>(index - 1));
    }

    RingElement parse_rational() {
        Int num = parse_int();
        skip_space();
        if (accept('/')) {
            skip_space();
            std::size_t at = pos_;
            if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                throw parse_error("expected a denominator after '/'", pos_);
            }
            Int den = parse_int();
            if (den == 0) throw parse_error("zero denominator", at);
            return RingElement::constant(spec_, Rational(num) / Rational(den));
        }
        return RingElement::constant(spec_, Rational(num));
    }

    Int parse_int() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) throw parse_error("expected a number", pos_);
        return Int(std::string(src_.substr(start, pos_ - start)));
    }

    unsigned long long parse_uint_bounded(unsigned long long bound, const char* what) {
        std::size_t start = pos_;
        Int value = parse_int();
        if (value > bound) {
            throw parse_error(std::string(what) + " too large", start);
        }
        return value.convert_to<unsigned long long>();
    }

    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    // Powers beyond the ring's top degree vanish anyway; the bound only stops
    // runaway exponentiation of degree-zero constants.
    static constexpr unsigned long long kMaxExponent = 4096;

    const RingSpec& spec_;
    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline RingElement evaluate_expression(const RingSpec& spec, std::string_view src) {
    return detail::ExprParser(spec, src).parse();
}

/// The canonical serialization is a sub-grammar of the expression grammar.
inline RingElement parse_ring_element(const RingSpec& spec, std::string_view src) {
    return evaluate_expression(spec, src);
}

}  // namespace segre
