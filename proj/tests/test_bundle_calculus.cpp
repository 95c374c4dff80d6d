#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "segre/bundle_calculus.hpp"
#include "segre/expr.hpp"
#include "test_support.hpp"

using segre::bott_h;
using segre::chern_character;
using segre::chern_from_character;
using segre::chern_line;
using segre::chern_pullback_tangent;
using segre::ChernData;
using segre::euler_char_closed_form;
using segre::euler_char_hrr;
using segre::Int;
using segre::kunneth_h;
using segre::p1xp2;
using segre::Rational;
using segre::todd_class;
using segre::total_chern;
using segre::twist;
using segre::whitney_sum;

namespace {

segre::RingElement expr(const char* src) { return segre::evaluate_expression(p1xp2(), src); }

ChernData random_chern(std::mt19937_64& rng) {
    auto num = [&](long lo, long hi) { return testsupport::random_int(rng, lo, hi); };
    return ChernData(num(1, 6), {num(-8, 8), num(-8, 8)}, {num(-8, 8), num(-8, 8)}, num(-8, 8));
}

}  // namespace

TEST_CASE("chern data construction", "[bundle]") {
    CHECK_THROWS_AS(ChernData(0, {1, 1}, {0, 0}, 0), segre::domain_error);
    CHECK_THROWS_AS(ChernData(-2, {0, 0}, {0, 0}, 0), segre::domain_error);
    CHECK(chern_line(3, -1) == ChernData(1, {3, -1}, {0, 0}, 0));
    CHECK(to_text(chern_line(1, 2)) == "rank=1; c1=(1,2); c2=(0,0); c3=0");
}

TEST_CASE("whitney sums of split bundles", "[bundle]") {
    // O(1,0) + pullback of TP2(-1): total class (1+t1)(1+t2+t2^2)
    ChernData e0 = whitney_sum(chern_line(1, 0), chern_pullback_tangent());
    CHECK(e0 == ChernData(3, {1, 1}, {1, 1}, 1));
    CHECK(total_chern(e0) == expr("1 + t1 + t2 + t1*t2 + t2^2 + t1*t2^2"));

    CHECK(whitney_sum(chern_line(1, 0), chern_line(0, 1)) == ChernData(2, {1, 1}, {1, 0}, 0));
    CHECK(whitney_sum(chern_line(2, 0), chern_line(0, 1)) == ChernData(2, {2, 1}, {2, 0}, 0));

    // adding a trivial factor changes only the rank
    ChernData padded = whitney_sum(e0, chern_line(0, 0));
    CHECK(padded.rank() == 4);
    CHECK(padded.c1() == e0.c1());
    CHECK(padded.c2() == e0.c2());
    CHECK(padded.c3() == e0.c3());
}

TEST_CASE("whitney sum is commutative and associative", "[bundle][property]") {
    std::mt19937_64 rng(424242u);
    for (int trial = 0; trial < 100; ++trial) {
        ChernData x = random_chern(rng);
        ChernData y = random_chern(rng);
        ChernData z = random_chern(rng);
        REQUIRE(whitney_sum(x, y) == whitney_sum(y, x));
        REQUIRE(whitney_sum(whitney_sum(x, y), z) == whitney_sum(x, whitney_sum(y, z)));
    }
}

TEST_CASE("chern character anchor values", "[bundle]") {
    CHECK(chern_character(chern_line(1, 1)) ==
          expr("1 + t1 + t2 + t1*t2 + 1/2*t2^2 + 1/2*t1*t2^2"));
    CHECK(chern_character(chern_pullback_tangent()) == expr("2 + t2 - 1/2*t2^2"));
    CHECK(chern_character(chern_line(0, 0)) == expr("1"));
}

TEST_CASE("character is additive over whitney sums", "[bundle][property]") {
    std::mt19937_64 rng(7171u);
    for (int trial = 0; trial < 100; ++trial) {
        ChernData x = random_chern(rng);
        ChernData y = random_chern(rng);
        REQUIRE(chern_character(whitney_sum(x, y)) ==
                add(chern_character(x), chern_character(y)));
    }
}

TEST_CASE("character inversion", "[bundle]") {
    std::mt19937_64 rng(99091u);
    for (int trial = 0; trial < 200; ++trial) {
        ChernData x = random_chern(rng);
        REQUIRE(chern_from_character(x.rank(), chern_character(x)) == x);
    }
    // degree-0 part must equal the declared rank
    CHECK_THROWS_AS(chern_from_character(2, chern_character(chern_line(1, 1))),
                    segre::integrality_error);
    // fractional c1 is not the character of a sheaf
    CHECK_THROWS_AS(chern_from_character(1, expr("1 + 1/2*t1")), segre::integrality_error);
}

TEST_CASE("twist by line bundles", "[bundle]") {
    ChernData tangent = chern_pullback_tangent();
    CHECK(twist(tangent, 0, 0) == tangent);
    CHECK(twist(chern_line(2, -1), 1, 3) == chern_line(3, 2));
    // the rank-2 bundle with c1 = (2,1) and a (1,1) dependency conic
    CHECK(twist(tangent, 1, 0) == ChernData(2, {2, 1}, {1, 1}, 0));

    std::mt19937_64 rng(31337u);
    for (int trial = 0; trial < 100; ++trial) {
        ChernData x = random_chern(rng);
        Int s1 = testsupport::random_int(rng, -4, 4);
        Int s2 = testsupport::random_int(rng, -4, 4);
        REQUIRE(twist(twist(x, s1, s2), -s1, -s2) == x);
        Int u1 = testsupport::random_int(rng, -4, 4);
        Int u2 = testsupport::random_int(rng, -4, 4);
        REQUIRE(twist(twist(x, s1, s2), u1, u2) == twist(x, s1 + u1, s2 + u2));
    }
}

TEST_CASE("todd class of the threefold", "[bundle]") {
    CHECK(todd_class() == expr("1 + t1 + 3/2*t2 + 3/2*t1*t2 + t2^2 + t1*t2^2"));
    CHECK(integrate(todd_class()) == 1);  // chi(O) = 1
}

TEST_CASE("riemann-roch anchor values", "[bundle]") {
    CHECK(euler_char_hrr(chern_line(0, 0)) == 1);
    CHECK(euler_char_hrr(chern_line(1, 1)) == 6);
    CHECK(euler_char_closed_form(chern_line(1, 1)) == 6);
    // chi(O(a,b)) = (a+1)(b+1)(b+2)/2
    for (long a = -5; a <= 5; ++a) {
        for (long b = -5; b <= 5; ++b) {
            Int expected = Int(a + 1) * Int(b + 1) * Int(b + 2) / 2;
            CHECK(euler_char_hrr(chern_line(a, b)) == expected);
        }
    }
}

TEST_CASE("closed form equals riemann-roch", "[bundle][property]") {
    std::mt19937_64 rng(260822u);
    int checked = 0;
    while (checked < 150) {
        ChernData x = random_chern(rng);
        try {
            Int closed = euler_char_closed_form(x);
            REQUIRE(euler_char_hrr(x) == closed);
            ++checked;
        } catch (const segre::formula_error&) {
            // odd bracket: not the Chern data of a sheaf; HRR must agree that
            // the characteristic is fractional
            REQUIRE_THROWS_AS(euler_char_hrr(x), segre::integrality_error);
        }
    }
}

TEST_CASE("half-integer characteristics are rejected", "[bundle]") {
    CHECK_THROWS_AS(euler_char_closed_form(1, 0, 0, 1, 0, 0), segre::formula_error);
    CHECK_THROWS_AS(euler_char_hrr(ChernData(1, {0, 0}, {1, 0}, 0)), segre::integrality_error);
}

TEST_CASE("line-bundle cohomology", "[bundle]") {
    CHECK(bott_h(2, 1, 0) == 3);
    CHECK(bott_h(2, 2, 0) == 6);
    CHECK(bott_h(1, -2, 1) == 1);
    CHECK(bott_h(2, -3, 2) == 1);
    for (int i = 0; i <= 2; ++i) CHECK(bott_h(2, -2, i) == 0);
    CHECK(bott_h(2, -1, 0) == 0);
    CHECK(bott_h(2, 0, 0) == 1);

    CHECK(kunneth_h(2, 1, 0) == 9);
    CHECK(kunneth_h(-1, -1, 1) == 0);
    CHECK(kunneth_h(-2, 1, 1) == 3);
    for (int i = 0; i <= 3; ++i) CHECK(kunneth_h(0, 0, i) == (i == 0 ? 1 : 0));
}

TEST_CASE("cohomology sums match riemann-roch on a grid", "[bundle][oracle]") {
    for (long a = -6; a <= 6; ++a) {
        for (long b = -6; b <= 6; ++b) {
            Int alternating = 0;
            for (int i = 0; i <= 3; ++i) {
                Int h = kunneth_h(a, b, i);
                alternating += (i % 2 == 0) ? h : -h;
            }
            REQUIRE(euler_char_hrr(chern_line(a, b)) == alternating);
            REQUIRE(euler_char_closed_form(chern_line(a, b)) == alternating);
        }
    }
}

TEST_CASE("serre duality on the grid", "[bundle][oracle]") {
    // omega_X = O(-2,-3): h^i(O(a,b)) = h^{3-i}(O(-2-a,-3-b))
    for (long a = -6; a <= 6; ++a) {
        for (long b = -6; b <= 6; ++b) {
            for (int i = 0; i <= 3; ++i) {
                REQUIRE(kunneth_h(a, b, i) == kunneth_h(-2 - a, -3 - b, 3 - i));
            }
        }
    }
}

TEST_CASE("euler characteristic is additive over direct sums", "[bundle][oracle]") {
    std::mt19937_64 rng(606060u);
    for (int trial = 0; trial < 100; ++trial) {
        int parts = 1 + static_cast<int>(rng() % 4);
        ChernData sum = chern_line(0, 0);
        Int chi_parts = 1;  // chi(O) = 1
        for (int p = 0; p < parts; ++p) {
            Int a = testsupport::random_int(rng, -5, 5);
            Int b = testsupport::random_int(rng, -5, 5);
            sum = whitney_sum(sum, chern_line(a, b));
            Int chi_line = 0;
            for (int i = 0; i <= 3; ++i) {
                Int h = kunneth_h(a, b, i);
                chi_line += (i % 2 == 0) ? h : -h;
            }
            chi_parts += chi_line;
        }
        REQUIRE(euler_char_hrr(sum) == chi_parts);
        REQUIRE(euler_char_closed_form(sum) == chi_parts);
    }
}
