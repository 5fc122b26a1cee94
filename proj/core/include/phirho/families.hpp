#pragma once

// Named one-parameter families with closed-form statistics: the
// end-reflection maps (lower-bound attainers), the rising and plateau
// diagonal families interpolating between the two smallest star points, and
// ordinal sums including the interpolating family used by the refined
// envelope.

#include <vector>

#include "phirho/diagonals.hpp"
#include "phirho/rational.hpp"
#include "phirho/segment_map.hpp"

namespace phirho {

struct FamilyPoint {
    Rational phi;
    Rational rho;
};

// h = 1-x on [0,alpha] and [1-alpha,1], identity between; alpha in [0,1/2].
// phi = 6a^2-6a+1, rho = -16a^3+24a^2-12a+1; attains the lower bound with
// exact equality for every alpha.
struct EndReflection {
    SegmentMap support;
    FamilyPoint stats;
};
EndReflection end_reflection(const Rational& alpha);

// Diagonal 0 on [0,a], x-a on [a,1-a], 2x-1 on [1-a,1]; a in [1/4,1/2].
// phi = 6a^2-6a+1, rho = 8a^3-6a+3/2.
struct RisingDiagonal {
    Diagonal diagonal;
    FamilyPoint stats;
};
RisingDiagonal rising_diagonal(const Rational& a);

// One branch of a mass-transport map with a kernel weight: on [lo,hi] the
// branch sends u to slope*u + intercept and carries `weight` of the fibre.
struct WeightedBranch {
    Rational lo;
    Rational hi;
    Rational slope;
    Rational intercept;
    Rational weight;
};

// Plateau diagonal on breakpoints (0, 1/4, 1/4+b, 3/4-b, 3/4, 1) with values
// (0, 0, 2b, 1/2, 1/2, 1); b in [0,1/4]; zero-width pieces dropped.
// phi = -6b^2+3b-1/8, rho = 8b^3-12b^2+(9/2)b+1/8.  The support branches
// reproduce rho by weighted integration and have uniform margins.
struct PlateauDiagonal {
    Diagonal diagonal;
    std::vector<WeightedBranch> support;
    FamilyPoint stats;
};
PlateauDiagonal plateau_diagonal(const Rational& b);

// 12 * sum w * int_lo^hi u h(u) du - 3 over the branches.
Rational weighted_rho(const std::vector<WeightedBranch>& branches);
// sum w * lambda{u in [lo,hi] : h(u) <= v}; equals v for every v when the
// branches describe a copula's full mass.
Rational weighted_margin(const std::vector<WeightedBranch>& branches, const Rational& v);

// One ordinal-sum block [lo,hi] carrying a component with the given stats.
struct OrdinalBlock {
    Rational lo;
    Rational hi;
    FamilyPoint stats;
};

// Exact stats of the ordinal sum with the given blocks and the comonotone
// copula elsewhere.  Blocks may arrive unsorted and need not cover [0,1];
// gaps are completed with comonotone blocks (the displayed component
// formulas assume a full tiling).  Throws on overlap or degenerate blocks.
FamilyPoint ordinal_sum_stats(std::vector<OrdinalBlock> blocks);

// N equal blocks each carrying the rising diagonal copula at a = N/(2N+2);
// sits strictly above the reference envelope by 1/(2N^2(N+1)^3), exactly.
struct OrdinalInterpolation {
    std::vector<OrdinalBlock> blocks;
    FamilyPoint stats;
    Rational gap_above_reference;
};
OrdinalInterpolation ordinal_interpolation(int N);

}  // namespace phirho
