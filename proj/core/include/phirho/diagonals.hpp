#pragma once

// Piecewise-linear diagonal sections, the slope-{0,2} subclass with its
// approximation scheme, diagonal copulas with their two-point Markov kernel,
// and the correspondence between slope-{0,2} diagonals and fixed-point-free
// bi-monotone involutions.

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "phirho/rational.hpp"
#include "phirho/shuffles.hpp"

namespace phirho {

// A diagonal section: piecewise linear, delta(0) = 0, delta(1) = 1,
// non-decreasing, slopes in [0,2], delta(t) <= t.
class Diagonal {
  public:
    // Rejects the first violated axiom by name.
    static Diagonal validated(std::vector<Rational> breakpoints, std::vector<Rational> values);

    Rational operator()(const Rational& t) const;
    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<Rational>& values() const { return values_; }
    std::size_t piece_count() const { return breakpoints_.size() - 1; }
    // Slope of the piece [breakpoints[j], breakpoints[j+1]].
    Rational piece_slope(std::size_t j) const;

  private:
    Diagonal(std::vector<Rational> breakpoints, std::vector<Rational> values)
        : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {}
    std::vector<Rational> breakpoints_;
    std::vector<Rational> values_;
};

// A diagonal with slope 0 or 2 on each of n equal cells.  Stored as the
// slope pattern; n/2 zeros and n/2 twos, with every prefix satisfying
// 2 * (#twos among the first i) <= i.
class ZeroTwoDiagonal {
  public:
    static ZeroTwoDiagonal validated(int n, std::vector<int> slopes);
    // Pattern string of '0'/'2' characters, e.g. "0202".
    static ZeroTwoDiagonal from_pattern(int n, std::string_view pattern);

    int cells() const { return static_cast<int>(slopes_.size()); }
    const std::vector<int>& slopes() const { return slopes_; }
    std::string pattern() const;
    Diagonal as_diagonal() const;

    friend bool operator==(const ZeroTwoDiagonal&, const ZeroTwoDiagonal&) = default;

  private:
    explicit ZeroTwoDiagonal(std::vector<int> slopes) : slopes_(std::move(slopes)) {}
    std::vector<int> slopes_;
};

// Best slope-{0,2} minorant on 2N cells: sample y_i = delta(i/2N), place the
// k-th slope-2 cell at the first i with y_i >= k/N.  The result satisfies
// approx <= delta and sup |delta - approx| <= 1/N.  The callable overload
// serves non-piecewise-linear diagonals (e.g. t -> t^2); it must satisfy the
// diagonal axioms or the construction fails validation.
ZeroTwoDiagonal zero_two_approximation(const Diagonal& d, int N);
ZeroTwoDiagonal zero_two_approximation(const std::function<Rational(const Rational&)>& d, int N);

// The diagonal copula: min{u, v, (delta(u) + delta(v))/2}.
Rational diagonal_cdf(const Diagonal& d, const Rational& u, const Rational& v);

// One fibre of the Markov kernel of the diagonal copula: mass weight_lower at
// height `lower`, the rest at `upper`, with lower <= t <= upper.
struct KernelAtom {
    Rational t;
    Rational lower;
    Rational upper;
    Rational weight_lower;  // slope(t)/2
};

// Throws if t lies on a breakpoint (the slope, hence the kernel, is only
// determined off a null set) or outside (0,1).
KernelAtom diagonal_kernel(const Diagonal& d, const Rational& t);

// The copula CDF recovered from the kernel by integrating the fibres over
// [0,u]: equals diagonal_cdf everywhere; computed in closed form via the
// generalized inverses of delta and g(t) = 2t - delta(t).
Rational disintegration_cdf(const Diagonal& d, const Rational& u, const Rational& v);

// Rank-pairing correspondence: slope-2 cells become the strips moved left,
// slope-0 cells the strips moved right, matched in increasing order.  The
// shuffle's CDF coincides with the diagonal copula's on the cell grid.
Involution diagonal_to_shuffle(const ZeroTwoDiagonal& d);

// Inverse direction; requires a fixed-point-free involution that is strictly
// increasing on the strips moved left (each violation named separately).
ZeroTwoDiagonal shuffle_to_diagonal(const Involution& p);

// Exact comparisons on the merged breakpoint set (sufficient for piecewise
// linear functions).
bool pointwise_leq(const Diagonal& a, const Diagonal& b);
Rational sup_distance(const Diagonal& a, const Diagonal& b);

}  // namespace phirho
