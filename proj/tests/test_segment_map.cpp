#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "phirho/segment_map.hpp"

using namespace phirho;

namespace {
const SegmentMap kIdentity = SegmentMap::validated({Piece{0, 1, +1, 0}});
const SegmentMap kReflect = SegmentMap::validated({Piece{0, 1, -1, 1}});
}  // namespace

TEST_CASE("validation rejects broken piece lists") {
    CHECK_THROWS_WITH_AS(SegmentMap::validated({}), "segment map: no pieces",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(SegmentMap::validated({Piece{0, 1, 2, 0}}),
                         "segment map: slope must be +1 or -1", std::invalid_argument);
    CHECK_THROWS_AS(SegmentMap::validated({Piece{Rational(1, 2), Rational(1, 2), 1, 0}}),
                    std::invalid_argument);
    // gap between pieces
    CHECK_THROWS_WITH_AS(
        SegmentMap::validated({Piece{0, Rational(1, 3), 1, 0}, Piece{Rational(1, 2), 1, 1, 0}}),
        "segment map: pieces must tile [0,1] in order", std::invalid_argument);
    // image escapes the square
    CHECK_THROWS_WITH_AS(SegmentMap::validated({Piece{0, 1, 1, Rational(1, 2)}}),
                         "segment map: image leaves [0,1]", std::invalid_argument);
    // two pieces landing on the same image interval
    CHECK_THROWS_WITH_AS(
        SegmentMap::validated({Piece{0, Rational(1, 2), 1, 0}, Piece{Rational(1, 2), 1, -1, 1}}),
        "segment map: not measure-preserving", std::invalid_argument);
}

TEST_CASE("evaluation follows the active piece") {
    CHECK(kIdentity(Rational(1, 3)) == Rational(1, 3));
    CHECK(kReflect(Rational(1, 4)) == Rational(3, 4));
    CHECK(kReflect(Rational(1)) == Rational(0));
    CHECK_THROWS_AS(kIdentity(Rational(3, 2)), std::invalid_argument);
}

TEST_CASE("shuffle support covers the permuted strips") {
    const Permutation p = Permutation::validated(8, {4, 7, 8, 1, 6, 5, 2, 3});
    const SegmentMap m = shuffle_support(p);
    REQUIRE(m.pieces().size() == 8);
    for (int i = 1; i <= 8; ++i) {
        const Piece& piece = m.pieces()[static_cast<std::size_t>(i - 1)];
        CHECK(piece.lo == Rational(i - 1, 8));
        CHECK(piece.slope == 1);
        // left edge of strip i maps to the left edge of strip pi(i)
        CHECK(m(piece.lo) == Rational(p(i) - 1, 8));
    }
}

TEST_CASE("cdf of the extreme copulas") {
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= 4; ++j) {
            const Rational u(i, 4), v(j, 4);
            CHECK(cdf(kIdentity, u, v) == min(u, v));
            CHECK(cdf(kReflect, u, v) == max(Rational(0), u + v - 1));
        }
    CHECK(cdf(kIdentity, Rational(1), Rational(1)) == Rational(1));
    CHECK(cdf(kReflect, Rational(1, 2), Rational(1, 2)) == Rational(0));
}

TEST_CASE("double cdf agrees with the exact one on a dyadic grid") {
    const SegmentMap m = shuffle_support(Permutation::validated(4, {2, 1, 4, 3}));
    for (int i = 0; i <= 16; ++i)
        for (int j = 0; j <= 16; ++j) {
            const Rational u(i, 16), v(j, 16);
            const double d = cdf(m, i / 16.0, j / 16.0);
            CHECK(std::abs(d - cdf(m, u, v).to_double()) < 1e-12);
        }
}

TEST_CASE("exact integration reproduces the shuffle statistics") {
    CHECK(phi_exact(kIdentity) == Rational(1));
    CHECK(rho_exact(kIdentity) == Rational(1));
    CHECK(phi_exact(kReflect) == Rational(-1, 2));
    CHECK(rho_exact(kReflect) == Rational(-1));

    const Permutation ex = Permutation::validated(8, {4, 7, 8, 1, 6, 5, 2, 3});
    const SegmentMap m = shuffle_support(ex);
    CHECK(phi_exact(m) == Rational(-5, 16));
    CHECK(rho_exact(m) == Rational(-13, 32));

    // a support map that is not a strip shuffle: reflect only the middle half
    const SegmentMap mid = SegmentMap::validated({Piece{0, Rational(1, 4), 1, 0},
                                                  Piece{Rational(1, 4), Rational(3, 4), -1, 1},
                                                  Piece{Rational(3, 4), 1, 1, 0}});
    CHECK(phi_exact(mid) == Rational(5, 8));
    CHECK(rho_exact(mid) == Rational(3, 4));
}
