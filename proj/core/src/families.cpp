#include "phirho/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "phirho/bounds.hpp"

namespace phirho {

namespace {

void push_piece(std::vector<Piece>& pieces, Rational lo, Rational hi, int slope,
                Rational intercept) {
    if (lo == hi) return;  // degenerate at parameter endpoints
    pieces.push_back(Piece{std::move(lo), std::move(hi), slope, std::move(intercept)});
}

void push_pl(std::vector<Rational>& xs, std::vector<Rational>& ys, Rational x, Rational y) {
    if (!xs.empty() && xs.back() == x) return;  // drop zero-width pieces
    xs.push_back(std::move(x));
    ys.push_back(std::move(y));
}

void push_branch(std::vector<WeightedBranch>& branches, Rational lo, Rational hi,
                 Rational slope, Rational intercept, Rational weight) {
    if (lo == hi) return;
    branches.push_back(WeightedBranch{std::move(lo), std::move(hi), std::move(slope),
                                      std::move(intercept), std::move(weight)});
}

}  // namespace

EndReflection end_reflection(const Rational& alpha) {
    if (alpha.sign() < 0 || alpha > Rational(1, 2))
        throw std::invalid_argument("end reflection: alpha outside [0, 1/2]");
    std::vector<Piece> pieces;
    push_piece(pieces, Rational(0), alpha, -1, Rational(1));
    push_piece(pieces, alpha, Rational(1) - alpha, 1, Rational(0));
    push_piece(pieces, Rational(1) - alpha, Rational(1), -1, Rational(1));
    EndReflection fam{SegmentMap::validated(std::move(pieces)), {}};
    const Rational a = alpha;
    fam.stats.phi = Rational(6) * a * a - Rational(6) * a + Rational(1);
    fam.stats.rho =
        Rational(-16) * a * a * a + Rational(24) * a * a - Rational(12) * a + Rational(1);
    return fam;
}

RisingDiagonal rising_diagonal(const Rational& a) {
    if (a < Rational(1, 4) || a > Rational(1, 2))
        throw std::invalid_argument("rising diagonal: a outside [1/4, 1/2]");
    std::vector<Rational> xs, ys;
    push_pl(xs, ys, Rational(0), Rational(0));
    push_pl(xs, ys, a, Rational(0));
    push_pl(xs, ys, Rational(1) - a, Rational(1) - Rational(2) * a);
    push_pl(xs, ys, Rational(1), Rational(1));
    RisingDiagonal fam{Diagonal::validated(std::move(xs), std::move(ys)), {}};
    fam.stats.phi = Rational(6) * a * a - Rational(6) * a + Rational(1);
    fam.stats.rho = Rational(8) * a * a * a - Rational(6) * a + Rational(3, 2);
    return fam;
}

PlateauDiagonal plateau_diagonal(const Rational& b) {
    if (b.sign() < 0 || b > Rational(1, 4))
        throw std::invalid_argument("plateau diagonal: b outside [0, 1/4]");
    const Rational q(1, 4), h(1, 2);
    std::vector<Rational> xs, ys;
    push_pl(xs, ys, Rational(0), Rational(0));
    push_pl(xs, ys, q, Rational(0));
    push_pl(xs, ys, q + b, Rational(2) * b);
    push_pl(xs, ys, Rational(3, 4) - b, h);
    push_pl(xs, ys, Rational(3, 4), h);
    push_pl(xs, ys, Rational(1), Rational(1));
    PlateauDiagonal fam{Diagonal::validated(std::move(xs), std::move(ys)), {}, {}};

    // Support branches of the copula's mass, each with its kernel weight; the
    // middle slope-1/2 interval carries two half-weight branches.
    auto& br = fam.support;
    push_branch(br, Rational(0), b, Rational(1), q, Rational(1));
    push_branch(br, b, q, Rational(2), q - b, Rational(1));
    push_branch(br, q, q + b, Rational(1), -q, Rational(1));
    push_branch(br, q + b, Rational(3, 4) - b, h, Rational(5, 8) - b * h, h);
    push_branch(br, q + b, Rational(3, 4) - b, h, b * h - Rational(1, 8), h);
    push_branch(br, Rational(3, 4) - b, Rational(3, 4), Rational(1), q, Rational(1));
    push_branch(br, Rational(3, 4), Rational(1) - b, Rational(2), b - Rational(5, 4),
                Rational(1));
    push_branch(br, Rational(1) - b, Rational(1), Rational(1), -q, Rational(1));

    fam.stats.phi = Rational(-6) * b * b + Rational(3) * b - Rational(1, 8);
    fam.stats.rho =
        Rational(8) * b * b * b - Rational(12) * b * b + Rational(9, 2) * b + Rational(1, 8);
    return fam;
}

Rational weighted_rho(const std::vector<WeightedBranch>& branches) {
    Rational moment;
    for (const auto& br : branches) {
        const Rational cubes = pow_ui(br.hi, 3) - pow_ui(br.lo, 3);
        const Rational squares = br.hi * br.hi - br.lo * br.lo;
        moment += br.weight * (br.slope * cubes / Rational(3) + br.intercept * squares / Rational(2));
    }
    return Rational(12) * moment - Rational(3);
}

Rational weighted_margin(const std::vector<WeightedBranch>& branches, const Rational& v) {
    Rational total;
    for (const auto& br : branches) {
        Rational measure;
        if (br.slope.sign() > 0) {
            // h(u) <= v on an initial part of the branch
            const Rational cut = (v - br.intercept) / br.slope;
            measure = min(br.hi, max(br.lo, cut)) - br.lo;
        } else if (br.slope.sign() < 0) {
            const Rational cut = (v - br.intercept) / br.slope;
            measure = br.hi - min(br.hi, max(br.lo, cut));
        } else {
            measure = br.intercept <= v ? br.hi - br.lo : Rational(0);
        }
        total += br.weight * measure;
    }
    return total;
}

FamilyPoint ordinal_sum_stats(std::vector<OrdinalBlock> blocks) {
    for (const auto& blk : blocks) {
        if (!(blk.lo < blk.hi))
            throw std::invalid_argument("ordinal sum: degenerate block");
        if (blk.lo.sign() < 0 || blk.hi > Rational(1))
            throw std::invalid_argument("ordinal sum: block outside [0,1]");
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const OrdinalBlock& x, const OrdinalBlock& y) { return x.lo < y.lo; });
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
        if (blocks[i].hi > blocks[i + 1].lo)
            throw std::invalid_argument("ordinal sum: overlapping blocks");

    // Complete gaps with comonotone blocks; the component formulas below
    // presume the blocks tile [0,1].
    std::vector<OrdinalBlock> tiled;
    Rational cursor(0);
    const FamilyPoint comonotone{Rational(1), Rational(1)};
    for (auto& blk : blocks) {
        if (cursor < blk.lo) tiled.push_back({cursor, blk.lo, comonotone});
        cursor = blk.hi;
        tiled.push_back(std::move(blk));
    }
    if (cursor < Rational(1)) tiled.push_back({cursor, Rational(1), comonotone});

    FamilyPoint stats{Rational(0), Rational(0)};
    Rational rho_loss, phi_sum;
    for (const auto& blk : tiled) {
        const Rational width = blk.hi - blk.lo;
        rho_loss += pow_ui(width, 3) * (Rational(1) - blk.stats.rho);
        phi_sum += Rational(6) * blk.lo * width + width * width * (blk.stats.phi + Rational(2));
    }
    stats.rho = Rational(1) - rho_loss;
    stats.phi = phi_sum - Rational(2);
    return stats;
}

OrdinalInterpolation ordinal_interpolation(int N) {
    if (N < 2) throw std::invalid_argument("ordinal interpolation: N must be at least 2");
    const Rational a(N, 2 * N + 2);
    const FamilyPoint component = rising_diagonal(a).stats;
    OrdinalInterpolation fam;
    for (int k = 1; k <= N; ++k)
        fam.blocks.push_back({Rational(k - 1, N), Rational(k, N), component});
    fam.stats = ordinal_sum_stats(fam.blocks);
    const Rational left = Rational(1) - Rational(3, 2 * N);
    const Rational right = Rational(1) - Rational(3, 2 * (N + 1));
    if (fam.stats.phi < left || fam.stats.phi > right)
        throw std::logic_error("ordinal interpolation: phi escaped its knot interval");
    const EnvelopeValue r = reference_envelope(fam.stats.phi);
    fam.gap_above_reference = fam.stats.rho - r.exact_value();
    return fam;
}

}  // namespace phirho
