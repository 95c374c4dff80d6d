#pragma once

// Chern-class calculus for sheaves on P^1 x P^2.  Chern data live in the
// truncated ring Z[t1,t2]/(t1^2, t2^3): c1 = a1*t1 + a2*t2 in degree 1,
// c2 = b1*t1*t2 + b2*t2^2 in degree 2, c3 = c3*t1*t2^2 in degree 3.  The
// Chern character and Todd class carry exact rational coefficients, and every
// Euler characteristic is checked for integrality before being returned.

#include <string>
#include <utility>

#include "segre/errors.hpp"
#include "segre/intersection_ring.hpp"
#include "segre/rational.hpp"

namespace segre {

/// The ambient threefold's ring presentation: dimensions (1, 2).
inline const RingSpec& p1xp2() {
    static const RingSpec spec = make_ring({1, 2});
    return spec;
}

/// (rank, c1, c2, c3) of a sheaf on P^1 x P^2, components in the bases above.
/// Rank 0 (torsion) is out of scope and rejected.
class ChernData {
public:
    ChernData(Int rank, std::pair<Int, Int> c1, std::pair<Int, Int> c2, Int c3)
        : rank_(std::move(rank)), c1_(std::move(c1)), c2_(std::move(c2)), c3_(std::move(c3)) {
        if (rank_ < 1) {
            throw domain_error("ChernData requires rank >= 1, got " + rank_.str());
        }
    }

    const Int& rank() const noexcept { return rank_; }
    const std::pair<Int, Int>& c1() const noexcept { return c1_; }
    const std::pair<Int, Int>& c2() const noexcept { return c2_; }
    const Int& c3() const noexcept { return c3_; }

    bool operator==(const ChernData&) const = default;

private:
    Int rank_;
    std::pair<Int, Int> c1_;
    std::pair<Int, Int> c2_;
    Int c3_;
};

inline ChernData chern_line(const Int& a, const Int& b) {
    return ChernData(1, {a, b}, {0, 0}, 0);
}

/// Chern data of the pullback to P^1 x P^2 of TP^2(-1) along the second
/// projection: rank 2, c1 = (0,1), c2 = (0,1), c3 = 0.
inline ChernData chern_pullback_tangent() { return ChernData(2, {0, 1}, {0, 1}, 0); }

namespace detail {

inline RingElement c1_class(const ChernData& x) {
    return add(RingElement::monomial(p1xp2(), {1, 0}, Rational(x.c1().first)),
               RingElement::monomial(p1xp2(), {0, 1}, Rational(x.c1().second)));
}

inline RingElement c2_class(const ChernData& x) {
    return add(RingElement::monomial(p1xp2(), {1, 1}, Rational(x.c2().first)),
               RingElement::monomial(p1xp2(), {0, 2}, Rational(x.c2().second)));
}

inline RingElement c3_class(const ChernData& x) {
    return RingElement::monomial(p1xp2(), {1, 2}, Rational(x.c3()));
}

inline Int component(const RingElement& x, std::vector<int> exponent, const char* what) {
    return require_integer(x.coeff(exponent), what);
}

}  // namespace detail

/// Total Chern class 1 + c1 + c2 + c3 as a ring element.
inline RingElement total_chern(const ChernData& x) {
    return add(add(RingElement::one(p1xp2()), detail::c1_class(x)),
               add(detail::c2_class(x), detail::c3_class(x)));
}

/// Chern data of a direct sum (or any extension) via c(E)c(F), truncated.
inline ChernData whitney_sum(const ChernData& x, const ChernData& y) {
    RingElement c = mul(total_chern(x), total_chern(y));
    RingElement c1 = graded_part(c, 1);
    RingElement c2 = graded_part(c, 2);
    RingElement c3 = graded_part(c, 3);
    return ChernData(x.rank() + y.rank(),
                     {detail::component(c1, {1, 0}, "whitney_sum c1"),
                      detail::component(c1, {0, 1}, "whitney_sum c1")},
                     {detail::component(c2, {1, 1}, "whitney_sum c2"),
                      detail::component(c2, {0, 2}, "whitney_sum c2")},
                     detail::component(c3, {1, 2}, "whitney_sum c3"));
}

/// Chern character r + c1 + (c1^2 - 2c2)/2 + (c1^3 - 3c1c2 + 3c3)/6.
inline RingElement chern_character(const ChernData& x) {
    RingElement c1 = detail::c1_class(x);
    RingElement c2 = detail::c2_class(x);
    RingElement c3 = detail::c3_class(x);
    RingElement c1sq = mul(c1, c1);
    RingElement ch2 = scale(Rational(1) / 2, sub(c1sq, scale(2, c2)));
    RingElement ch3 = scale(Rational(1) / 6,
                            add(sub(mul(c1sq, c1), scale(3, mul(c1, c2))), scale(3, c3)));
    return add(add(RingElement::constant(p1xp2(), Rational(x.rank())), c1), add(ch2, ch3));
}

/// Inverse of chern_character via Newton's identities.  The rank must match
/// the degree-0 part of ch, and every recovered class must be integral.
inline ChernData chern_from_character(const Int& rank, const RingElement& ch) {
    if (!(ch.spec() == p1xp2())) {
        throw spec_mismatch_error("chern_from_character: character must live on P^1 x P^2");
    }
    if (ch.coeff({0, 0}) != Rational(rank)) {
        throw integrality_error("chern_from_character: degree-0 part " +
                                to_string(ch.coeff({0, 0})) + " does not equal the rank " +
                                rank.str());
    }
    RingElement c1 = graded_part(ch, 1);
    RingElement ch2 = graded_part(ch, 2);
    RingElement ch3 = graded_part(ch, 3);
    RingElement c1sq = mul(c1, c1);
    // ch2 = (c1^2 - 2c2)/2  =>  c2 = (c1^2 - 2*ch2)/2
    RingElement c2 = scale(Rational(1) / 2, sub(c1sq, scale(2, ch2)));
    // ch3 = (c1^3 - 3c1c2 + 3c3)/6  =>  c3 = 2*ch3 - c1^3/3 + c1*c2
    RingElement c3 = add(sub(scale(2, ch3), scale(Rational(1) / 3, mul(c1sq, c1))), mul(c1, c2));
    return ChernData(rank,
                     {detail::component(c1, {1, 0}, "chern_from_character c1"),
                      detail::component(c1, {0, 1}, "chern_from_character c1")},
                     {detail::component(c2, {1, 1}, "chern_from_character c2"),
                      detail::component(c2, {0, 2}, "chern_from_character c2")},
                     detail::component(c3, {1, 2}, "chern_from_character c3"));
}

/// Chern data of E(s1,s2) = E tensor O(s1,s2), computed through the
/// multiplicativity of the character; c1 is cross-checked against its closed
/// form c1(E) + rank*(s1,s2).
inline ChernData twist(const ChernData& x, const Int& s1, const Int& s2) {
    RingElement ch = mul(chern_character(x), chern_character(chern_line(s1, s2)));
    ChernData out = chern_from_character(x.rank(), ch);
    std::pair<Int, Int> expected{x.c1().first + x.rank() * s1, x.c1().second + x.rank() * s2};
    if (out.c1() != expected) {
        throw error("twist: computed c1 disagrees with its closed form");
    }
    return out;
}

/// Todd class of P^1 x P^2: (1 + t1)(1 + (3/2)t2 + t2^2).
inline RingElement todd_class() {
    RingElement left = add(RingElement::one(p1xp2()), RingElement::generator(p1xp2(), 0));
    RingElement right = add(RingElement::one(p1xp2()),
                            add(RingElement::monomial(p1xp2(), {0, 1}, Rational(3) / 2),
                                RingElement::monomial(p1xp2(), {0, 2})));
    return mul(left, right);
}

/// Euler characteristic through Hirzebruch-Riemann-Roch:
/// chi(E) = integral of ch(E) td(X).
inline Int euler_char_hrr(const ChernData& x) {
    Rational chi = integrate(mul(chern_character(x), todd_class()));
    return require_integer(chi, "euler_char_hrr");
}

/// Closed-form Euler characteristic on P^1 x P^2:
/// chi = r + [2a1 + (a1+1)a2(a2+3) - ((a2+3)b1 + (a1+2)b2) + c3] / 2.
/// The bracket must be even; an odd bracket means the input is not the Chern
/// data of a sheaf and the formula does not apply.
inline Int euler_char_closed_form(const Int& r, const Int& a1, const Int& a2, const Int& b1,
                                  const Int& b2, const Int& c3) {
    Int bracket = 2 * a1 + (a1 + 1) * a2 * (a2 + 3) - ((a2 + 3) * b1 + (a1 + 2) * b2) + c3;
    if (bracket % 2 != 0) {
        throw formula_error("euler_char_closed_form: half-integer result for rank " + r.str());
    }
    return r + bracket / 2;
}

inline Int euler_char_closed_form(const ChernData& x) {
    return euler_char_closed_form(x.rank(), x.c1().first, x.c1().second, x.c2().first,
                                  x.c2().second, x.c3());
}

/// h^i(P^n, O(a)) by Bott's formula: only i = 0 and i = n can be nonzero.
inline Int bott_h(int n, const Int& a, int i) {
    if (n < 1) throw domain_error("bott_h: projective space dimension must be >= 1");
    if (i < 0) throw domain_error("bott_h: cohomological degree must be >= 0");
    if (i == 0) return a >= 0 ? binomial(n + a, n) : Int(0);
    if (i == n) return a <= -n - 1 ? binomial(-a - 1, n) : Int(0);
    return 0;
}

/// h^i(P^1 x P^2, O(a,b)) by the Kunneth formula over Bott's values.
inline Int kunneth_h(const Int& a, const Int& b, int i) {
    if (i < 0) throw domain_error("kunneth_h: cohomological degree must be >= 0");
    Int total = 0;
    for (int p = 0; p <= i; ++p) {
        total += bott_h(1, a, p) * bott_h(2, b, i - p);
    }
    return total;
}

/// Text form "rank=r; c1=(a1,a2); c2=(b1,b2); c3=c".
inline std::string to_text(const ChernData& x) {
    return "rank=" + x.rank().str() + "; c1=(" + x.c1().first.str() + "," +
           x.c1().second.str() + "); c2=(" + x.c2().first.str() + "," + x.c2().second.str() +
           "); c3=" + x.c3().str();
}

}  // namespace segre
