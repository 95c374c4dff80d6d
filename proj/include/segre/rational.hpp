#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "segre/errors.hpp"

namespace segre {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Numerator of an exactly integral rational; throws otherwise.
inline Int require_integer(const Rational& q, const std::string& what) {
    if (!is_integer(q)) {
        throw integrality_error(what + ": expected an integer, got " + q.str());
    }
    return numerator(q);
}

/// Binomial coefficient C(n, k) for integer n and k >= 0, as the polynomial
/// n(n-1)...(n-k+1)/k!; exact at every step because the partial products are
/// themselves binomial coefficients.
inline Int binomial(const Int& n, const Int& k) {
    if (k < 0) return 0;
    if (n >= 0 && n < k) return 0;
    Int acc = 1;
    for (Int i = 0; i < k; ++i) {
        acc *= n - i;
        acc /= i + 1;
    }
    return acc;
}

/// Canonical text form: "p" when integral, "p/q" otherwise (q > 0).
inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace segre
