#pragma once

// Chow rings of finite products of projective spaces P^{n_1} x ... x P^{n_s},
// presented as Z[t_1,...,t_s]/(t_1^{n_1+1},...,t_s^{n_s+1}) with exact
// rational coefficients.  Elements are immutable; every operation returns a
// fresh value in canonical form (no zero coefficients, every exponent within
// its truncation bound).

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "segre/errors.hpp"
#include "segre/rational.hpp"

namespace segre {

/// Dimension vector (n_1,...,n_s) of the underlying product of projective
/// spaces; t_i^{n_i+1} = 0 in the ring it presents.
class RingSpec {
public:
    explicit RingSpec(std::vector<int> factors) : factors_(std::move(factors)) {
        if (factors_.empty()) {
            throw invalid_spec_error("ring spec needs at least one factor");
        }
        for (int n : factors_) {
            if (n < 1) {
                throw invalid_spec_error(
                    "ring spec factors must have dimension >= 1, got " + std::to_string(n));
            }
        }
    }

    std::size_t arity() const noexcept { return factors_.size(); }
    int factor_dim(std::size_t i) const { return factors_.at(i); }
    const std::vector<int>& factors() const noexcept { return factors_; }

    /// Real dimension of the product; also the unique top nonzero degree.
    int top_degree() const { return std::accumulate(factors_.begin(), factors_.end(), 0); }

    /// Exponent vector of the point class t_1^{n_1}...t_s^{n_s}.
    const std::vector<int>& top_exponent() const noexcept { return factors_; }

    bool operator==(const RingSpec&) const = default;

private:
    std::vector<int> factors_;
};

inline RingSpec make_ring(std::vector<int> factors) { return RingSpec(std::move(factors)); }

class RingElement {
public:
    /// Exponent vector -> coefficient; absent key means coefficient zero.
    using TermMap = std::map<std::vector<int>, Rational>;

    static RingElement zero(const RingSpec& spec) { return RingElement(spec, TermMap{}); }

    static RingElement constant(const RingSpec& spec, const Rational& c) {
        return monomial(spec, std::vector<int>(spec.arity(), 0), c);
    }

    static RingElement one(const RingSpec& spec) { return constant(spec, 1); }

    /// c * t_1^{d_1}...t_s^{d_s}; out-of-bound exponents truncate to zero.
    static RingElement monomial(const RingSpec& spec, std::vector<int> exponents,
                                const Rational& c = 1) {
        if (exponents.size() != spec.arity()) {
            throw domain_error("monomial exponent vector has wrong arity");
        }
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            if (exponents[i] < 0) {
                throw domain_error("monomial exponents must be nonnegative");
            }
            if (exponents[i] > spec.factor_dim(i)) return zero(spec);
        }
        if (c == 0) return zero(spec);
        TermMap terms;
        terms.emplace(std::move(exponents), c);
        return RingElement(spec, std::move(terms));
    }

    /// The hyperplane class t_{i+1} (0-based index into the factors).
    static RingElement generator(const RingSpec& spec, std::size_t i) {
        if (i >= spec.arity()) {
            throw domain_error("generator index out of range");
        }
        std::vector<int> exponents(spec.arity(), 0);
        exponents[i] = 1;
        return monomial(spec, std::move(exponents));
    }

    const RingSpec& spec() const noexcept { return spec_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coeff(const std::vector<int>& exponents) const {
        auto it = terms_.find(exponents);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool operator==(const RingElement&) const = default;

private:
    RingElement(RingSpec spec, TermMap terms)
        : spec_(std::move(spec)), terms_(std::move(terms)) {}

    friend RingElement add(const RingElement&, const RingElement&);
    friend RingElement mul(const RingElement&, const RingElement&);
    friend RingElement scale(const Rational&, const RingElement&);
    friend RingElement graded_part(const RingElement&, int);

    RingSpec spec_;
    TermMap terms_;
};

namespace detail {

inline void require_same_spec(const RingElement& x, const RingElement& y, const char* op) {
    if (!(x.spec() == y.spec())) {
        throw spec_mismatch_error(std::string(op) + ": operands belong to different rings");
    }
}

inline int total_degree(const std::vector<int>& exponents) {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
}

}  // namespace detail

inline RingElement add(const RingElement& x, const RingElement& y) {
    detail::require_same_spec(x, y, "add");
    RingElement::TermMap out = x.terms();
    for (const auto& [e, c] : y.terms()) {
        auto [it, inserted] = out.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    }
    return RingElement(x.spec(), std::move(out));
}

inline RingElement scale(const Rational& q, const RingElement& x) {
    if (q == 0) return RingElement::zero(x.spec());
    RingElement::TermMap out;
    for (const auto& [e, c] : x.terms()) out.emplace(e, q * c);
    return RingElement(x.spec(), std::move(out));
}

inline RingElement sub(const RingElement& x, const RingElement& y) {
    return add(x, scale(-1, y));
}

inline RingElement mul(const RingElement& x, const RingElement& y) {
    detail::require_same_spec(x, y, "mul");
    const RingSpec& spec = x.spec();
    RingElement::TermMap out;
    for (const auto& [ex, cx] : x.terms()) {
        for (const auto& [ey, cy] : y.terms()) {
            std::vector<int> e(ex.size());
            bool truncated = false;
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ex[i] + ey[i];
                if (e[i] > spec.factor_dim(i)) {
                    truncated = true;
                    break;
                }
            }
            if (truncated) continue;
            auto [it, inserted] = out.emplace(std::move(e), cx * cy);
            if (!inserted) {
                it->second += cx * cy;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return RingElement(spec, std::move(out));
}

inline RingElement pow(const RingElement& x, unsigned long long k) {
    RingElement acc = RingElement::one(x.spec());
    RingElement base = x;
    while (k > 0) {
        if (k & 1ull) acc = mul(acc, base);
        k >>= 1ull;
        if (k > 0) base = mul(base, base);
        if (acc.is_zero()) break;
    }
    return acc;
}

/// Sum of the terms of total degree d.
inline RingElement graded_part(const RingElement& x, int d) {
    RingElement::TermMap out;
    for (const auto& [e, c] : x.terms()) {
        if (detail::total_degree(e) == d) out.emplace(e, c);
    }
    return RingElement(x.spec(), std::move(out));
}

/// Evaluation against the fundamental class: the coefficient of the point
/// class t_1^{n_1}...t_s^{n_s}.
inline Rational integrate(const RingElement& x) { return x.coeff(x.spec().top_exponent()); }

inline RingElement operator+(const RingElement& x, const RingElement& y) { return add(x, y); }
inline RingElement operator-(const RingElement& x, const RingElement& y) { return sub(x, y); }
inline RingElement operator-(const RingElement& x) { return scale(-1, x); }
inline RingElement operator*(const RingElement& x, const RingElement& y) { return mul(x, y); }
inline RingElement operator*(const Rational& q, const RingElement& x) { return scale(q, x); }
inline RingElement operator*(const RingElement& x, const Rational& q) { return scale(q, x); }

namespace detail {

/// Serialization order: total degree ascending, then exponent vectors in
/// descending lexicographic order, so that e.g. t1*t2 precedes t2^2.
inline bool term_order(const std::pair<std::vector<int>, Rational>& a,
                       const std::pair<std::vector<int>, Rational>& b) {
    int da = total_degree(a.first);
    int db = total_degree(b.first);
    if (da != db) return da < db;
    return a.first > b.first;
}

inline std::string monomial_text(const std::vector<int>& exponents) {
    std::string out;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "t" + std::to_string(i + 1);
        if (exponents[i] > 1) out += "^" + std::to_string(exponents[i]);
    }
    return out;
}

}  // namespace detail

/// Canonical text form, e.g. "1 + t1 + 3/2*t2 - t1*t2^2"; "0" for zero.
inline std::string to_string(const RingElement& x) {
    if (x.is_zero()) return "0";
    std::vector<std::pair<std::vector<int>, Rational>> terms(x.terms().begin(), x.terms().end());
    std::sort(terms.begin(), terms.end(), detail::term_order);
    std::string out;
    for (const auto& [e, c] : terms) {
        const bool negative = c < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = negative ? Rational(-c) : c;
        const std::string vars = detail::monomial_text(e);
        if (vars.empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += vars;
        } else {
            out += to_string(mag) + "*" + vars;
        }
    }
    return out;
}

}  // namespace segre
