#pragma once

// Verification suites.  Every check replays one mathematical claim end to
// end with exact arithmetic (bounds, the equality characterization, the
// rearrangement transform, diagonal/shuffle round trips, family closed
// forms, envelope ordering) and reports the first counterexample on failure.

#include <cstdint>
#include <string>
#include <vector>

namespace phirho {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;  // statistics on pass, the first counterexample on failure
};

// Both region bounds over every involution of sizes [n_min, n_max]; also
// cross-checks the two rho formulas and the involution counts.
CheckResult check_involution_bounds(int n_min, int n_max);
// {rho equals the upper bound exactly} == {flagged by attains_upper_bound}.
CheckResult check_upper_equality_set(int n_min, int n_max);
// Adjacent-swap involutions: closed forms, bound contact, envelope contact.
CheckResult check_adjacent_swap_touch(int n_max);
// Grid oracle vs exact integration for random straight shuffles.
CheckResult check_oracle_agreement(int per_n, int n_min, int n_max, int resolution,
                                   std::uint64_t seed);

// Exhaustive rearrangement: phi preserved, rho weakly decreased, canonical
// class membership, slack sign vs the lower-bound verdict.
CheckResult check_rearrangement_exhaustive(int n_max);
// The worked 8- and 16-strip instances, step functions and blocks included.
CheckResult check_rearrangement_anchors();
// Step-function pair of every involution: norm inequality, block structure,
// the polarization identity, and the norm/rho correspondences.
CheckResult check_rearrangement_steps(int n_max);
// Random (f, g) property test of the rearrangement inequality.
CheckResult check_rearrangement_random(int pairs, std::uint64_t seed);

// All slope patterns: CDF equality on the cell grid, both round trips,
// disintegration agreement, and the pattern counts.
CheckResult check_roundtrip_exhaustive(int n_max);
// The worked 12-cell pattern.
CheckResult check_roundtrip_anchor();
// The rank pairing strictly maximizes rho over all admissible pairings.
CheckResult check_pairing_maximality(int n_max);
// Kernel atoms, disintegration CDF on dense grids, monotone support maps.
CheckResult check_kernel_identities();
// Slope-{0,2} minorants of the extreme diagonals and of t^2.
CheckResult check_approximation();

// Closed forms vs independent exact integration on rational parameter grids.
CheckResult check_end_reflection(int grid);
CheckResult check_rising(int grid);
CheckResult check_plateau(int grid);
// Family chain: rising(1/2) = S2*, rising(1/4) = plateau(0), plateau(1/4) = S4*.
CheckResult check_family_chain();
// Ordinal interpolation gaps above the reference envelope, exactly.
CheckResult check_ordinal_gaps(int n_max);

// Pinned envelope values, branch continuity, ordering on a dense grid.
CheckResult check_envelope_values();
// Strict refined-over-reference dominance at random non-knot samples.
CheckResult check_envelope_order(int samples, std::uint64_t seed);

// Named suites for the command line; n_max caps enumerations, seed feeds the
// sampled checks.
std::vector<std::string> suite_names();
std::vector<CheckResult> verify_suite(const std::string& suite, int n_max, std::uint64_t seed);

}  // namespace phirho
