#include <catch2/catch.hpp>

#include <random>

#include "cubics/hilb.hpp"

using namespace cubics;

namespace {
const HilbContext kFour{4, 7};  // Hilb^4 of a degree-14 K3
}

TEST_CASE("BBF pairing instance values") {
    HilbPicClass H{1, 0}, B{0, 1};
    CHECK(bbf_pairing(kFour, H, H) == 14);
    CHECK(bbf_pairing(kFour, H, B) == 0);
    CHECK(bbf_pairing(kFour, B, B) == -6);

    HilbPicClass K{9, -14};
    CHECK(bbf_pairing(kFour, K, H) == 126);
    CHECK(bbf_pairing(kFour, K, HilbPicClass{55, -84}) == -126);
}

TEST_CASE("BBF pairing is symmetric and bilinear") {
    std::mt19937 rng(555);
    std::uniform_int_distribution<long> coeff(-20, 20), nn(2, 6), dd(1, 30);
    for (int trial = 0; trial < 300; ++trial) {
        HilbContext ctx(nn(rng), dd(rng));
        HilbPicClass u{coeff(rng), coeff(rng)}, v{coeff(rng), coeff(rng)}, w{coeff(rng), coeff(rng)};
        Int lam = coeff(rng);
        CHECK(bbf_pairing(ctx, u, v) == bbf_pairing(ctx, v, u));
        HilbPicClass lin{u.x + lam * v.x, u.y + lam * v.y};
        CHECK(bbf_pairing(ctx, lin, w) ==
              bbf_pairing(ctx, u, w) + lam * bbf_pairing(ctx, v, w));
    }
}

TEST_CASE("movable cone of Hilb^4 of the degree-14 K3: case c") {
    MovableConeResult r = movable_cone(kFour);
    REQUIRE(r.cone_case == MovableConeResult::Case::c);
    CHECK(r.dn == 21);
    CHECK_FALSE(r.dn_is_square);
    CHECK(r.case_b.no_solution());
    CHECK(r.case_b.certificate == "no solution mod 3");
    REQUIRE(r.pell);
    CHECK(r.pell->x == 55);
    CHECK(r.pell->y == 12);
    CHECK(*r.wall1 == HilbPicClass{1, 0});
    CHECK(*r.wall2 == HilbPicClass{55, -84});
    CHECK(*r.congruence_mod_nminus1 == 1);
}

TEST_CASE("movable cone case detection on other instances") {
    SECTION("square d(n-1) is case a, classification only") {
        MovableConeResult r = movable_cone(HilbContext{2, 4});
        CHECK(r.cone_case == MovableConeResult::Case::a);
        CHECK(r.dn == 4);
        CHECK_FALSE(r.wall1);
        CHECK_FALSE(r.wall2);
    }

    SECTION("n = 4, d = 21 lands in case c with wall 8H - 21B") {
        MovableConeResult r = movable_cone(HilbContext{4, 21});
        REQUIRE(r.cone_case == MovableConeResult::Case::c);
        REQUIRE(r.pell);
        CHECK(r.pell->x == 8);
        CHECK(r.pell->y == 1);
        CHECK(*r.wall2 == HilbPicClass{8, -21});
        CHECK(*r.congruence_mod_nminus1 == 2);  // not the verified class; diagnostic only
    }

    SECTION("solvable intermediate equation is case b") {
        // n = 5, d = 3: 4X^2 - 3Y^2 = 1 at (X, Y) = (1, 1).
        MovableConeResult r = movable_cone(HilbContext{5, 3});
        CHECK(r.cone_case == MovableConeResult::Case::b);
        CHECK(r.case_b.solved());
        CHECK_FALSE(r.wall2);
    }

    SECTION("n = 2 with nonsquare d is always case b") {
        MovableConeResult r = movable_cone(HilbContext{2, 7});
        CHECK(r.cone_case == MovableConeResult::Case::b);
    }
}

TEST_CASE("case-c wall satisfies q(W, W) = 2d") {
    for (long n = 2; n <= 6; ++n)
        for (long d = 1; d <= 50; ++d) {
            HilbContext ctx(n, d);
            MovableConeResult r = movable_cone(ctx);
            if (r.cone_case != MovableConeResult::Case::c) continue;
            CHECK(bbf_pairing(ctx, *r.wall2, *r.wall2) == 2 * d);
            CHECK(bbf_pairing(ctx, *r.wall1, *r.wall1) == 2 * d);
        }
}

TEST_CASE("effective avoidance: the obstruction at (14, 9)") {
    AvoidanceReport rep = effective_avoidance(kFour, 14, 9);
    CHECK(rep.K == HilbPicClass{9, -14});
    CHECK(rep.pair_wall1 == 126);
    CHECK(rep.pair_wall2 == -126);
    CHECK_FALSE(rep.plus_ok);
    CHECK_FALSE(rep.minus_ok);
    CHECK(rep.contradiction);
}

TEST_CASE("effective avoidance: classes that are not obstructed") {
    AvoidanceReport rep = effective_avoidance(kFour, 0, 1);
    CHECK(rep.K == HilbPicClass{1, 0});
    CHECK(rep.pair_wall1 == 14);
    CHECK(rep.pair_wall2 == 55 * 14);
    CHECK(rep.plus_ok);
    CHECK_FALSE(rep.contradiction);
}

TEST_CASE("effective avoidance: sign-flipped input") {
    AvoidanceReport rep = effective_avoidance(kFour, 14, -9);
    CHECK(rep.K == HilbPicClass{-9, -14});
    CHECK(rep.pair_wall1 == -bbf_pairing(kFour, HilbPicClass{9, 14}, HilbPicClass{1, 0}));
    CHECK(rep.contradiction == (!rep.plus_ok && !rep.minus_ok));
}

TEST_CASE("effective avoidance input validation") {
    CHECK_THROWS_AS(effective_avoidance(kFour, 0, 0), std::invalid_argument);
    // Case a has no walls to pair against.
    CHECK_THROWS_AS(effective_avoidance(HilbContext{2, 4}, 14, 9), std::domain_error);
}

TEST_CASE("context validation") {
    CHECK_THROWS_AS(HilbContext(1, 7), std::invalid_argument);
    CHECK_THROWS_AS(HilbContext(4, 0), std::invalid_argument);
}
