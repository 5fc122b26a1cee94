#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "phirho/diagonals.hpp"

using namespace phirho;

namespace {
const Diagonal kComonotone = Diagonal::validated({0, 1}, {0, 1});
const Diagonal kCounter =
    Diagonal::validated({0, Rational(1, 2), 1}, {0, 0, 1});
}  // namespace

TEST_CASE("diagonal axioms are enforced") {
    CHECK_THROWS_WITH_AS(Diagonal::validated({0, 1}, {0}),
                         "diagonal: need matching breakpoint/value sequences",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(Diagonal::validated({Rational(1, 4), 1}, {0, 1}),
                         "diagonal: breakpoints must run from 0 to 1", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        Diagonal::validated({0, Rational(1, 2), Rational(1, 2), 1}, {0, 0, 0, 1}),
        "diagonal: breakpoints must increase strictly", std::invalid_argument);
    CHECK_THROWS_WITH_AS(Diagonal::validated({0, 1}, {0, Rational(1, 2)}),
                         "diagonal: endpoint values must be 0 and 1", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        Diagonal::validated({0, Rational(1, 2), 1}, {0, Rational(3, 4), 1}),
        "diagonal: values must stay below the identity", std::invalid_argument);
    // slope 3 on the last quarter
    CHECK_THROWS_WITH_AS(
        Diagonal::validated({0, Rational(3, 4), 1}, {0, Rational(1, 4), 1}),
        "diagonal: slope exceeds 2", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        Diagonal::validated({0, Rational(1, 4), Rational(1, 2), 1},
                            {0, Rational(1, 4), Rational(1, 8), 1}),
        "diagonal: values must be non-decreasing", std::invalid_argument);
}

TEST_CASE("evaluation interpolates linearly") {
    CHECK(kCounter(Rational(1, 4)) == Rational(0));
    CHECK(kCounter(Rational(3, 4)) == Rational(1, 2));
    CHECK(kCounter(Rational(1)) == Rational(1));
    CHECK(kCounter.piece_slope(0) == Rational(0));
    CHECK(kCounter.piece_slope(1) == Rational(2));
    CHECK_THROWS_AS(kCounter(Rational(-1, 8)), std::invalid_argument);
}

TEST_CASE("slope patterns respect the prefix constraint") {
    const ZeroTwoDiagonal d = ZeroTwoDiagonal::from_pattern(4, "0202");
    CHECK(d.cells() == 4);
    CHECK(d.pattern() == "0202");
    CHECK(d.slopes() == std::vector<int>({0, 2, 0, 2}));
    CHECK(d == ZeroTwoDiagonal::validated(4, {0, 2, 0, 2}));
    CHECK_THROWS_WITH_AS(ZeroTwoDiagonal::from_pattern(4, "2002"),
                         "zero-two diagonal: prefix constraint violated", std::invalid_argument);
    CHECK_THROWS_WITH_AS(ZeroTwoDiagonal::from_pattern(4, "0200"),
                         "zero-two diagonal: needs n/2 slope-2 cells", std::invalid_argument);
    CHECK_THROWS_AS(ZeroTwoDiagonal::from_pattern(3, "020"), std::invalid_argument);
    CHECK_THROWS_AS(ZeroTwoDiagonal::from_pattern(4, "02x2"), std::invalid_argument);

    const Diagonal full = d.as_diagonal();
    CHECK(full.breakpoints() ==
          std::vector<Rational>({0, Rational(1, 4), Rational(1, 2), Rational(3, 4), 1}));
    CHECK(full.values() ==
          std::vector<Rational>({0, 0, Rational(1, 2), Rational(1, 2), 1}));
}

TEST_CASE("minorant construction hits the pinned patterns") {
    CHECK(zero_two_approximation(kComonotone, 2).pattern() == "0202");
    CHECK(zero_two_approximation(kCounter, 2).pattern() == "0022");
    for (int N : {2, 4, 8, 16}) {
        for (const Diagonal* d : {&kComonotone, &kCounter}) {
            const ZeroTwoDiagonal a = zero_two_approximation(*d, N);
            CHECK(a.cells() == 2 * N);
            CHECK(pointwise_leq(a.as_diagonal(), *d));
            CHECK(sup_distance(*d, a.as_diagonal()) <= Rational(1, N));
        }
    }
    const auto square = [](const Rational& t) { return t * t; };
    const ZeroTwoDiagonal sq = zero_two_approximation(square, 4);
    const Diagonal approx = sq.as_diagonal();
    for (int i = 0; i <= 8; ++i) {
        const Rational x(i, 8);
        CHECK(approx(x) <= square(x));
        CHECK(square(x) - approx(x) <= Rational(1, 4));
    }
}

TEST_CASE("diagonal copula cdf") {
    // min{u, v, (delta(u)+delta(v))/2} for the countermonotone diagonal
    CHECK(diagonal_cdf(kCounter, Rational(1, 2), Rational(1, 2)) == Rational(0));
    CHECK(diagonal_cdf(kCounter, Rational(3, 4), Rational(3, 4)) == Rational(1, 2));
    CHECK(diagonal_cdf(kCounter, Rational(1, 4), Rational(1)) == Rational(1, 4));
    CHECK(diagonal_cdf(kComonotone, Rational(1, 3), Rational(2, 3)) == Rational(1, 3));
    CHECK_THROWS_AS(diagonal_cdf(kCounter, Rational(2), Rational(0)), std::invalid_argument);
}

TEST_CASE("kernel fibres bracket t and carry slope/2 mass below") {
    const Diagonal quarter = ZeroTwoDiagonal::from_pattern(4, "0202").as_diagonal();
    const KernelAtom a = diagonal_kernel(quarter, Rational(3, 8));
    CHECK(a.t == Rational(3, 8));
    CHECK(a.weight_lower == Rational(1));  // slope 2 there
    CHECK(a.lower <= a.t);
    CHECK(a.t <= a.upper);
    const KernelAtom b = diagonal_kernel(quarter, Rational(1, 8));
    CHECK(b.weight_lower == Rational(0));  // slope 0: all mass above
    CHECK(b.upper >= Rational(1, 4));
    CHECK_THROWS_WITH_AS(diagonal_kernel(quarter, Rational(1, 4)),
                         "diagonal kernel: t sits on a breakpoint", std::invalid_argument);
    CHECK_THROWS_AS(diagonal_kernel(quarter, Rational(0)), std::invalid_argument);
}

TEST_CASE("disintegration integrates the kernel back to the cdf") {
    const Diagonal quarter = ZeroTwoDiagonal::from_pattern(4, "0202").as_diagonal();
    for (int i = 0; i <= 16; ++i)
        for (int j = 0; j <= 16; ++j) {
            const Rational u(i, 16), v(j, 16);
            CHECK(disintegration_cdf(quarter, u, v) == diagonal_cdf(quarter, u, v));
        }
}

TEST_CASE("diagonal/shuffle round trip on the 12-cell instance") {
    const ZeroTwoDiagonal d = ZeroTwoDiagonal::from_pattern(12, "002022020022");
    const Involution pi = diagonal_to_shuffle(d);
    CHECK(pi == Permutation::validated(12, {3, 5, 1, 6, 2, 4, 8, 7, 11, 12, 9, 10}));
    CHECK(shuffle_to_diagonal(pi).pattern() == "002022020022");

    CHECK(diagonal_to_shuffle(ZeroTwoDiagonal::from_pattern(2, "02")) ==
          Permutation::validated(2, {2, 1}));
}

TEST_CASE("shuffle_to_diagonal rejects shuffles outside the class") {
    CHECK_THROWS_WITH_AS(shuffle_to_diagonal(Involution::validated(3, {1, 3, 2})),
                         "shuffle to diagonal: fixed points present", std::invalid_argument);
    // pairs (1,3) and (2,4): strips 3,4 move left onto 1,2 in order — fine
    CHECK(shuffle_to_diagonal(Involution::validated(4, {3, 4, 1, 2})).pattern() == "0022");
    // pairs (1,4) and (2,3): images of the left-movers decrease
    CHECK_THROWS_WITH_AS(shuffle_to_diagonal(Involution::validated(4, {4, 3, 2, 1})),
                         "shuffle to diagonal: not increasing on the strips moved left",
                         std::invalid_argument);
}

TEST_CASE("pointwise order and sup distance") {
    CHECK(pointwise_leq(kCounter, kComonotone));
    CHECK(!pointwise_leq(kComonotone, kCounter));
    CHECK(sup_distance(kComonotone, kCounter) == Rational(1, 2));
    CHECK(sup_distance(kCounter, kCounter) == Rational(0));
}
