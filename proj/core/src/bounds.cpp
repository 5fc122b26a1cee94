#include "phirho/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace phirho {

namespace {

void check_domain(const Rational& x) {
    if (x < Rational(-1, 2) || x > Rational(1))
        throw std::invalid_argument("envelope: x outside [-1/2, 1]");
}

EnvelopeValue linear(Rational value) {
    EnvelopeValue v;
    v.affine = std::move(value);
    return v;
}

EnvelopeValue power_branch_left(const Rational& x) {
    // 2x + 1/2 - (sqrt(3)/9)(1+2x)^(3/2), shared by r and s on [-1/2, -1/8).
    EnvelopeValue v;
    v.affine = Rational(2) * x + Rational(1, 2);
    v.coeff = Rational(-1, 9);
    v.base = 3;
    v.radicand = Rational(1) + Rational(2) * x;
    return v;
}

// Largest n >= 2 with 1 - 3/(2n) < x, for x in (1/4, 1); this is the branch
// whose half-open knot interval (1 - 3/(2n), 1 - 3/(2(n+1))] contains x.
int knot_branch(const Rational& x) {
    int n = 2;
    while (Rational(1) - Rational(3, 2 * (n + 1)) < x) ++n;
    return n;
}

// Statistics of the interpolating ordinal sum on the n-th knot interval:
// phi = (2n^2+n-4)/(2(n+1)^2), rho = (2n^5+6n^4+3n^3-7n^2-3n+1)/(2n^2(n+1)^3).
// The families module reproduces both from its own construction.
Rational interp_phi(long n) { return Rational(2 * n * n + n - 4, 2 * (n + 1) * (n + 1)); }

Rational interp_rho(long n) {
    const Rational num(((((Rational(2) * n + 6) * n + 3) * n - 7) * n - 3) * n + 1);
    return num / (Rational(2) * n * n * pow_ui(Rational(n + 1), 3));
}

Rational star_phi(long n) { return Rational(1) - Rational(3, 2 * n); }
Rational star_rho(long n) { return Rational(1) - Rational(3, 2 * n * n); }

EnvelopeValue chord(const Rational& x1, const Rational& y1, const Rational& x2,
                    const Rational& y2, const Rational& x) {
    const Rational slope = (y2 - y1) / (x2 - x1);
    return linear(y1 + slope * (x - x1));
}

}  // namespace

RegionPoint make_region_point(Rational phi, Rational rho, std::string label) {
    if (phi < Rational(-1, 2) || phi > Rational(1))
        throw std::invalid_argument("region point: phi outside [-1/2, 1]");
    if (rho < Rational(-1) || rho > Rational(1))
        throw std::invalid_argument("region point: rho outside [-1, 1]");
    return RegionPoint{std::move(phi), std::move(rho), std::move(label)};
}

BoundCheck check_upper(const RegionPoint& pt) {
    const Rational bound = upper_bound(pt.phi);
    if (pt.rho > bound) return BoundCheck::violated;
    return pt.rho == bound ? BoundCheck::equality : BoundCheck::strict;
}

BoundCheck check_lower(const RegionPoint& pt) {
    // rho >= (2/9)sqrt(3)(1+2phi)^(3/2) - 1, i.e. the power term against
    // 1 + rho; (2/9)^2 * 3 = 4/27.
    const auto cmp =
        compare_pow32(Rational(4, 27), Rational(1) + Rational(2) * pt.phi, Rational(1) + pt.rho);
    if (cmp == std::strong_ordering::greater) return BoundCheck::violated;
    return cmp == std::strong_ordering::equal ? BoundCheck::equality : BoundCheck::strict;
}

Rational upper_bound(const Rational& x) {
    check_domain(x);
    const Rational one_minus = Rational(1) - x;
    return Rational(1) - Rational(2, 3) * one_minus * one_minus;
}

Rational EnvelopeValue::exact_value() const {
    if (!exact()) throw std::logic_error("envelope value: not exact on a power branch");
    return affine;
}

double EnvelopeValue::to_double() const {
    return affine.to_double() +
           coeff.to_double() * std::sqrt(static_cast<double>(base)) *
               std::pow(radicand.to_double(), 1.5);
}

std::strong_ordering EnvelopeValue::compare(const Rational& y) const {
    if (exact()) return affine <=> y;
    const Rational c_squared = coeff * coeff * Rational(base);
    if (coeff.sign() > 0) return compare_pow32(c_squared, radicand, y - affine);
    const auto cmp = compare_pow32(c_squared, radicand, affine - y);
    if (cmp == std::strong_ordering::less) return std::strong_ordering::greater;
    if (cmp == std::strong_ordering::greater) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

std::strong_ordering EnvelopeValue::compare(const EnvelopeValue& other) const {
    if (other.exact()) return compare(other.affine);
    if (exact()) {
        const auto cmp = other.compare(affine);
        if (cmp == std::strong_ordering::less) return std::strong_ordering::greater;
        if (cmp == std::strong_ordering::greater) return std::strong_ordering::less;
        return std::strong_ordering::equal;
    }
    if (base == other.base && radicand == other.radicand) {
        EnvelopeValue diff;
        diff.affine = affine - other.affine;
        diff.coeff = coeff - other.coeff;
        diff.base = base;
        diff.radicand = radicand;
        return diff.compare(Rational(0));
    }
    throw std::logic_error("envelope value: incomparable power forms");
}

EnvelopeValue lower_bound(const Rational& x) {
    check_domain(x);
    EnvelopeValue v;
    v.affine = Rational(-1);
    v.coeff = Rational(2, 9);
    v.base = 3;
    v.radicand = Rational(1) + Rational(2) * x;
    return v;
}

EnvelopeValue reference_envelope(const Rational& x) {
    check_domain(x);
    if (x < Rational(-1, 8)) return power_branch_left(x);
    if (x <= Rational(1, 4)) return linear(Rational(4, 3) * x + Rational(7, 24));
    if (x == Rational(1)) return linear(Rational(1));
    const long n = knot_branch(x);
    return linear(Rational(2 * n + 1, n * n + n) * x +
                  Rational(2 * n * n - 2 * n + 1, 2 * (n * n + n)));
}

EnvelopeValue refined_envelope(const Rational& x) {
    check_domain(x);
    if (x < Rational(-1, 8)) return power_branch_left(x);
    if (x <= Rational(1, 4)) {
        EnvelopeValue v;
        v.affine = x + Rational(3, 8);
        v.coeff = Rational(-1, 36);
        v.base = 6;
        v.radicand = Rational(1) - Rational(4) * x;
        return v;
    }
    if (x == Rational(1)) return linear(Rational(1));
    const long n = knot_branch(x);
    const Rational mid_x = interp_phi(n);
    if (x <= mid_x)
        return chord(star_phi(n), star_rho(n), mid_x, interp_rho(n), x);
    return chord(mid_x, interp_rho(n), star_phi(n + 1), star_rho(n + 1), x);
}

RegionReport region_verdict(const RegionPoint& pt) {
    RegionReport rep;
    rep.upper = check_upper(pt);
    rep.lower = check_lower(pt);
    const EnvelopeValue r = reference_envelope(pt.phi);
    if (r.exact()) {
        rep.reference_gap_known = true;
        rep.above_reference = pt.rho - r.exact_value();
    }
    const EnvelopeValue s = refined_envelope(pt.phi);
    if (s.exact()) {
        rep.refined_gap_known = true;
        rep.below_refined = s.exact_value() - pt.rho;
    }
    return rep;
}

std::string to_string(BoundCheck c) {
    switch (c) {
        case BoundCheck::strict: return "strict";
        case BoundCheck::equality: return "equality";
        default: return "violated";
    }
}

}  // namespace phirho
