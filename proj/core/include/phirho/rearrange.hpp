#pragma once

// Displacement vectors of involutions, the lower-bound slack m, the canonical
// rearranged classes, and the mass-rearrangement transform that preserves phi
// while weakly decreasing rho.

#include <string>
#include <utility>
#include <vector>

#include "phirho/rational.hpp"
#include "phirho/shuffles.hpp"
#include "phirho/step_function.hpp"

namespace phirho {

// Sorted strip displacements of an involution over the strips moved left,
// scaled by 1/n; total = n * sum(entries) is the integer total displacement.
struct DisplacementVector {
    int n = 0;
    int k = 0;                     // number of strips moved left
    std::vector<Rational> entries;  // non-decreasing, in (0,1]
    long total = 0;                 // at most n^2/4
};

DisplacementVector displacement_vector(const Involution& p);

// The slack 1 - (6/n)*sum p_i^2 - (1 - (4/n)*sum p_i)^(3/2), whose
// non-negativity is the lower bound of the region inequality for the shuffle.
//  linear_term = 1 - (6/n)*sum p_i^2   (equals (1+rho)/2)
//  power_arg   = 1 - (4/n)*sum p_i     (equals (1+2phi)/3)
// sign is decided exactly: negative linear term forces -1, otherwise compare
// linear_term^2 against power_arg^3.
struct LowerSlack {
    int sign = 0;
    double value = 0.0;
    Rational linear_term;
    Rational power_arg;
};

// Throws if power_arg would be negative (impossible for displacement vectors
// of genuine involutions).
LowerSlack lower_bound_slack(int n, const DisplacementVector& pv);
LowerSlack lower_bound_slack(const Involution& p);

// The canonical rearrangement: same total displacement pushed into a terminal
// nest, preserving phi exactly and weakly decreasing rho.  Total for every
// involution; the zero-displacement case returns the identity.
Involution canonical_rearrangement(const Involution& p);

// Membership in the canonical classes, by literal test:
//  terminal_swap: the only strip moved left is n, paired with some j < n;
//  nested_block:  the strips moved left are a terminal block {n-k+1,...,n},
//                 k >= 2, fully nested except that the innermost strip may be
//                 paired anywhere with displacement in {1,...,n-(2k-1)}.
enum class RearrangeClass { terminal_swap, nested_block, none };

RearrangeClass rearrangement_class(const Involution& p);
std::string to_string(RearrangeClass c);  // "terminal-swap" / "nested-block" / "none"

// The step-function pair behind the rearrangement: f from the displacement
// vector scaled by k/n, g = f - f_hat with the rearranged vector left-padded
// by zeros to k cells.  Requires a positive total displacement.
std::pair<StepFunction, StepFunction> rearrangement_steps(const Involution& p);

}  // namespace phirho
