#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "phirho/bounds.hpp"

using namespace phirho;

TEST_CASE("region points are range-checked") {
    CHECK_THROWS_WITH_AS(make_region_point(Rational(-3, 4), Rational(0)),
                         "region point: phi outside [-1/2, 1]", std::invalid_argument);
    CHECK_THROWS_WITH_AS(make_region_point(Rational(0), Rational(2)),
                         "region point: rho outside [-1, 1]", std::invalid_argument);
    const RegionPoint pt = make_region_point(Rational(1, 4), Rational(5, 8), "knot");
    CHECK(pt.label == "knot");
}

TEST_CASE("upper bound curve and verdicts") {
    CHECK(upper_bound(Rational(-1, 2)) == Rational(-1, 2));
    CHECK(upper_bound(Rational(0)) == Rational(1, 3));
    CHECK(upper_bound(Rational(1, 4)) == Rational(5, 8));
    CHECK(upper_bound(Rational(1)) == Rational(1));
    CHECK_THROWS_WITH_AS(upper_bound(Rational(-2, 3)), "envelope: x outside [-1/2, 1]",
                         std::invalid_argument);

    CHECK(check_upper(make_region_point(Rational(1), Rational(1))) == BoundCheck::equality);
    CHECK(check_upper(make_region_point(Rational(-1, 2), Rational(-1))) == BoundCheck::strict);
    CHECK(check_upper(make_region_point(Rational(0), Rational(9, 10))) == BoundCheck::violated);
    CHECK(to_string(BoundCheck::strict) == "strict");
    CHECK(to_string(BoundCheck::equality) == "equality");
    CHECK(to_string(BoundCheck::violated) == "violated");
}

TEST_CASE("lower bound curve and verdicts") {
    const EnvelopeValue left = lower_bound(Rational(-1, 2));
    CHECK(left.exact());
    CHECK(left.exact_value() == Rational(-1));
    CHECK(lower_bound(Rational(1)).compare(Rational(1)) == std::strong_ordering::equal);
    // (2/9)sqrt(3)(3/2)^(3/2) - 1 = sqrt(2)/2 - 1 at x = 1/4
    CHECK(std::abs(lower_bound(Rational(1, 4)).to_double() - (std::sqrt(0.5) - 1.0)) < 1e-15);

    CHECK(check_lower(make_region_point(Rational(-1, 2), Rational(-1))) == BoundCheck::equality);
    CHECK(check_lower(make_region_point(Rational(1), Rational(1))) == BoundCheck::equality);
    CHECK(check_lower(make_region_point(Rational(-1, 2), Rational(-1, 2))) == BoundCheck::strict);
    // sqrt(2)/2 - 1 is about -0.293; anything below violates
    CHECK(check_lower(make_region_point(Rational(1, 4), Rational(-3, 10))) ==
          BoundCheck::violated);
    CHECK(check_lower(make_region_point(Rational(1, 4), Rational(-29, 100))) ==
          BoundCheck::strict);
}

TEST_CASE("reference envelope branch values") {
    CHECK(reference_envelope(Rational(-1, 2)).exact_value() == Rational(-1, 2));
    CHECK(reference_envelope(Rational(-1, 8)).exact_value() == Rational(1, 8));
    CHECK(reference_envelope(Rational(1, 4)).exact_value() == Rational(5, 8));
    CHECK(reference_envelope(Rational(1, 3)).exact_value() == Rational(25, 36));
    CHECK(reference_envelope(Rational(1, 2)).exact_value() == Rational(5, 6));
    CHECK(reference_envelope(Rational(5, 8)).exact_value() == Rational(29, 32));
    CHECK(reference_envelope(Rational(1)).exact_value() == Rational(1));
    // below -1/8 the curve is a 3/2-power, irrational at generic points
    const EnvelopeValue pow = reference_envelope(Rational(-1, 4));
    CHECK(!pow.exact());
    CHECK(pow.base == 3);
    CHECK(pow.radicand == Rational(1, 2));
    // continuity at the branch point: the power form also equals 1/8 there
    const EnvelopeValue at_joint{Rational(1, 4), Rational(-1, 9), 3, Rational(3, 4)};
    CHECK(at_joint.compare(Rational(1, 8)) == std::strong_ordering::equal);
}

TEST_CASE("refined envelope branch values") {
    CHECK(refined_envelope(Rational(-1, 2)).exact_value() == Rational(-1, 2));
    CHECK(refined_envelope(Rational(-1, 8)).compare(Rational(1, 8)) ==
          std::strong_ordering::equal);
    CHECK(refined_envelope(Rational(1, 4)).exact_value() == Rational(5, 8));
    CHECK(refined_envelope(Rational(1, 3)).exact_value() == Rational(151, 216));
    CHECK(refined_envelope(Rational(7, 16)).exact_value() == Rational(451, 576));
    CHECK(refined_envelope(Rational(1, 2)).exact_value() == Rational(5, 6));
    CHECK(refined_envelope(Rational(1)).exact_value() == Rational(1));
    // the refinement is visible strictly between the knots
    CHECK(upper_bound(Rational(1, 3)) - refined_envelope(Rational(1, 3)).exact_value() ==
          Rational(1, 216));
    CHECK(refined_envelope(Rational(1, 3)).exact_value() >
          reference_envelope(Rational(1, 3)).exact_value());
}

TEST_CASE("both envelopes touch the upper bound at the knots") {
    for (int m = 2; m <= 8; ++m) {
        const Rational knot = Rational(1) - Rational(3, 2 * m);
        const Rational touch = Rational(1) - Rational(3, 2 * static_cast<long>(m) * m);
        CHECK(upper_bound(knot) == touch);
        CHECK(reference_envelope(knot).exact_value() == touch);
        CHECK(refined_envelope(knot).exact_value() == touch);
    }
}

TEST_CASE("envelope value comparisons stay exact") {
    // r(x) for x in the power region: both sides share base and radicand
    const Rational x(-1, 4);
    CHECK(reference_envelope(x).compare(refined_envelope(x)) == std::strong_ordering::equal);
    CHECK(lower_bound(x).compare(reference_envelope(x)) == std::strong_ordering::less);
    // mixed exact/symbolic comparisons delegate to the rational side
    CHECK(lower_bound(Rational(1, 4)).compare(Rational(0)) == std::strong_ordering::less);
    CHECK(lower_bound(Rational(1, 4)).compare(Rational(-1, 2)) == std::strong_ordering::greater);
}

TEST_CASE("region verdict aggregates bound checks and envelope gaps") {
    const RegionReport rep = region_verdict(make_region_point(Rational(1, 3), Rational(151, 216)));
    CHECK(rep.upper == BoundCheck::strict);
    CHECK(rep.lower == BoundCheck::strict);
    CHECK(rep.reference_gap_known);
    CHECK(rep.above_reference == Rational(151, 216) - Rational(25, 36));
    CHECK(rep.refined_gap_known);
    CHECK(rep.below_refined == Rational(0));

    // in the power region the reference gap has no rational value
    const RegionReport sym = region_verdict(make_region_point(Rational(-1, 4), Rational(0)));
    CHECK(!sym.reference_gap_known);
    CHECK(!sym.refined_gap_known);
}
