#pragma once

// The two region bounds, the piecewise boundary envelopes r (previously
// known) and s (refined), and exact membership verdicts for rational
// (phi, rho) points.  Values on branches carrying a 3/2-power are kept in
// symbolic form and compared via squared forms, never through doubles.

#include <compare>
#include <string>

#include "phirho/rational.hpp"

namespace phirho {

struct RegionPoint {
    Rational phi;  // in [-1/2, 1]
    Rational rho;  // in [-1, 1]
    std::string label;
};

// Range-checks the coordinates.
RegionPoint make_region_point(Rational phi, Rational rho, std::string label = "");

enum class BoundCheck { strict, equality, violated };

// rho against 1 - (2/3)(1-phi)^2, exact.
BoundCheck check_upper(const RegionPoint& pt);
// rho against (2/9)*sqrt(3)*(1+2phi)^(3/2) - 1, exact via squared forms.
BoundCheck check_lower(const RegionPoint& pt);

// Upper bound curve value, a plain rational.
Rational upper_bound(const Rational& x);

// A value of the form  affine + coeff * sqrt(base) * radicand^(3/2)  with
// rational affine/coeff/radicand and base in {1, 3, 6}; radicand >= 0.
// Linear branches have coeff = 0.  Comparisons against rationals are exact;
// comparisons between two values require a shared (base, radicand) or one
// exact side.
struct EnvelopeValue {
    Rational affine;
    Rational coeff;
    long base = 1;
    Rational radicand;

    bool exact() const { return coeff.sign() == 0 || radicand.sign() == 0; }
    Rational exact_value() const;  // requires exact()
    double to_double() const;
    std::strong_ordering compare(const Rational& y) const;
    std::strong_ordering compare(const EnvelopeValue& other) const;
};

// Lower bound curve value at x in [-1/2, 1].
EnvelopeValue lower_bound(const Rational& x);

// The previously known envelope r: a 3/2-power branch below -1/8, then
// (4/3)x + 7/24 up to 1/4, then one linear branch per knot interval
// (1 - 3/(2n), 1 - 3/(2(n+1))], with r(1) = 1.  Knots belong to the branch
// on their left; continuity makes the choice value-neutral.
EnvelopeValue reference_envelope(const Rational& x);

// The refined envelope s: the same power branch below -1/8, then
// x + 3/8 - (sqrt(6)/36)(1-4x)^(3/2) up to 1/4, then per knot interval two
// chords through the interpolating ordinal-sum point, with s(1) = 1.
EnvelopeValue refined_envelope(const Rational& x);

// Both bound verdicts, plus exact signed gaps against r and s where those
// envelopes are linear at phi.
struct RegionReport {
    BoundCheck upper = BoundCheck::strict;
    BoundCheck lower = BoundCheck::strict;
    bool reference_gap_known = false;
    Rational above_reference;  // rho - r(phi)
    bool refined_gap_known = false;
    Rational below_refined;  // s(phi) - rho
};

RegionReport region_verdict(const RegionPoint& pt);

std::string to_string(BoundCheck c);  // "strict" / "equality" / "violated"

}  // namespace phirho
