#pragma once

// Numerical invariants of the curves that arise as dependency loci of
// globally generated bundles on P^1 x P^2: bidegrees, arithmetic genus,
// degrees and section counts of twisted canonical bundles, and the rank
// ranges the Serre construction allows over a given curve.

#include <string>
#include <utility>

#include "segre/bundle_calculus.hpp"
#include "segre/errors.hpp"
#include "segre/intersection_ring.hpp"
#include "segre/rational.hpp"

namespace segre {

/// A 1-dimensional cycle on P^1 x P^2: s connected components, class
/// e2*t1*t2 + e1*t2^2 (bidegree (e1,e2)), arithmetic genus of the union.
class CurveData {
public:
    CurveData(Int s, Int e1, Int e2, Int genus)
        : s_(std::move(s)), e1_(std::move(e1)), e2_(std::move(e2)), genus_(std::move(genus)) {
        if (s_ < 1) throw domain_error("CurveData: component count must be >= 1");
        if (e1_ < 0 || e2_ < 0) throw domain_error("CurveData: bidegree must be nonnegative");
        if (e1_ == 0 && e2_ == 0) throw domain_error("CurveData: bidegree (0,0) is not a curve");
        if (genus_ < 1 - s_) {
            throw domain_error("CurveData: arithmetic genus below 1 - s is impossible");
        }
    }

    const Int& s() const noexcept { return s_; }
    const Int& e1() const noexcept { return e1_; }
    const Int& e2() const noexcept { return e2_; }
    const Int& genus() const noexcept { return genus_; }

    bool operator==(const CurveData&) const = default;

private:
    Int s_;
    Int e1_;
    Int e2_;
    Int genus_;
};

/// Degree-2 cycle class of a curve of bidegree (e1,e2): e2*t1*t2 + e1*t2^2.
/// (e1 counts the degree against O(1,0), e2 against O(0,1).)
inline RingElement class_from_bidegree(const Int& e1, const Int& e2) {
    if (e1 < 0 || e2 < 0) throw domain_error("class_from_bidegree: bidegree must be nonnegative");
    return add(RingElement::monomial(p1xp2(), {1, 1}, Rational(e2)),
               RingElement::monomial(p1xp2(), {0, 2}, Rational(e1)));
}

/// Inverse of class_from_bidegree on purely degree-2 integral classes.
inline std::pair<Int, Int> bidegree_from_class(const RingElement& x) {
    if (!(x.spec() == p1xp2())) {
        throw spec_mismatch_error("bidegree_from_class: class must live on P^1 x P^2");
    }
    if (!(graded_part(x, 2) == x)) {
        throw domain_error("bidegree_from_class: class is not purely of degree 2");
    }
    Int f1 = require_integer(x.coeff({1, 1}), "bidegree_from_class");
    Int f2 = require_integer(x.coeff({0, 2}), "bidegree_from_class");
    return {f2, f1};
}

/// Degree of O(a,b) restricted to the curve: a*e1 + b*e2.
inline Int pairing_degree(const CurveData& c, const Int& a, const Int& b) {
    return a * c.e1() + b * c.e2();
}

/// Degree in the Segre embedding: the pairing against O(1,1).
inline Int segre_degree(const CurveData& c) { return pairing_degree(c, 1, 1); }

/// Invariants of a smooth complete intersection of two divisors of type
/// (a,b) with a,b >= 1: connected, bidegree (b^2, 2ab), arithmetic genus
/// 1 + b(3ab - 3a - b).
inline CurveData ci_invariants(const Int& a, const Int& b) {
    if (a < 1 || b < 1) {
        throw unsupported_degenerate_error(
            "ci_invariants: complete intersections of type (a,b) need a,b >= 1; got (" +
            a.str() + "," + b.str() + ")");
    }
    return CurveData(1, b * b, 2 * a * b, 1 + b * (3 * a * b - 3 * a - b));
}

/// deg omega_C(u,v) = (2g - 2) + u*e1 + v*e2.
inline Int twisted_canonical_degree(const CurveData& c, const Int& u, const Int& v) {
    return 2 * c.genus() - 2 + pairing_degree(c, u, v);
}

/// h^0(omega_C(u,v)) in the regimes the classification needs:
///  - the twist has degree 0 and the caller certifies it is trivial: h^0 = s;
///  - C connected and the twist nonspecial (deg >= 2g - 1): deg - g + 1;
///  - C a disjoint union of s rational components carrying the same degree
///    (g = 1 - s, s | deg, deg >= 0): deg + s.
/// Anything else is outside the supported regimes.
inline Int h0_twisted_canonical(const CurveData& c, const Int& u, const Int& v,
                                bool certified_trivial = false) {
    Int deg = twisted_canonical_degree(c, u, v);
    if (certified_trivial && deg == 0) return c.s();
    if (c.s() == 1 && deg >= 2 * c.genus() - 1) return deg - c.genus() + 1;
    if (c.genus() == 1 - c.s() && deg >= 0 && deg % c.s() == 0) return deg + c.s();
    throw unsupported_regime_error(
        "h0_twisted_canonical: no supported regime for s=" + c.s().str() + " genus=" +
        c.genus().str() + " twist degree=" + deg.str());
}

/// Closed range of integers [lo, hi]; empty when lo > hi.
class RankRange {
public:
    RankRange(Int lo, Int hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

    static RankRange empty() { return RankRange(1, 0); }

    const Int& lo() const noexcept { return lo_; }
    const Int& hi() const noexcept { return hi_; }
    bool is_empty() const { return lo_ > hi_; }

    bool operator==(const RankRange& other) const {
        if (is_empty() && other.is_empty()) return true;
        return lo_ == other.lo_ && hi_ == other.hi_;
    }

private:
    Int lo_;
    Int hi_;
};

/// "[lo,hi]", or "[]" for the empty range.
inline std::string to_string(const RankRange& r) {
    if (r.is_empty()) return "[]";
    return "[" + r.lo().str() + "," + r.hi().str() + "]";
}

/// Ranks realizable by the Serre construction over a curve C for bundles
/// with first Chern class c1 = (a,b).  The relevant twist of the canonical
/// bundle is omega_C(2-a, 3-b):
///  - if that twist is trivial (degree 0 plus the caller's certificate),
///    the ranks are exactly [2, s+1];
///  - otherwise [3, 1 + h^0], empty when h^0 < 2.
inline RankRange serre_rank_range(const CurveData& c, const std::pair<Int, Int>& c1,
                                  bool certified_trivial = false) {
    Int u = 2 - c1.first;
    Int v = 3 - c1.second;
    if (certified_trivial && twisted_canonical_degree(c, u, v) == 0) {
        return RankRange(2, c.s() + 1);
    }
    Int h = h0_twisted_canonical(c, u, v, certified_trivial);
    if (h < 2) return RankRange::empty();
    return RankRange(3, h + 1);
}

/// Ranks for which the type-(a,b) complete intersection is a dependency
/// locus: [3, (a+1)*C(b+2,2) - 1].
inline RankRange ci_rank_range(const Int& a, const Int& b) {
    if (a < 1 || b < 1) {
        throw unsupported_degenerate_error("ci_rank_range: need a,b >= 1");
    }
    return RankRange(3, (a + 1) * binomial(b + 2, 2) - 1);
}

/// Dimension of the family of rank-r bundles built on the type-(1,1)
/// complete intersection: 6(r+1) - (r+1)^2 for r in {3,4,5}.
inline Int family_dimension_ci(const Int& r) {
    if (r < 3 || r > 5) {
        throw domain_error("family_dimension_ci: defined for ranks 3..5, got " + r.str());
    }
    return 6 * (r + 1) - (r + 1) * (r + 1);
}

/// Text form "s=.. bidegree=(e1,e2) genus=..".
inline std::string to_text(const CurveData& c) {
    return "s=" + c.s().str() + " bidegree=(" + c.e1().str() + "," + c.e2().str() +
           ") genus=" + c.genus().str();
}

}  // namespace segre
