#pragma once

#include <vector>

#include "phirho/rational.hpp"

namespace phirho {

/// Piecewise-constant function on [0,1] over m equal cells; cell i (0-based)
/// covers ((i)/m, (i+1)/m] and carries an exact rational value.
class StepFunction {
public:
    explicit StepFunction(std::vector<Rational> values);

    int cells() const { return static_cast<int>(values_.size()); }
    const Rational& operator[](int cell) const { return values_[cell]; }
    const std::vector<Rational>& values() const { return values_; }

    Rational integral() const;       // (1/m) * sum v_i
    Rational norm_sq() const;        // squared L2 norm, (1/m) * sum v_i^2

    friend StepFunction operator-(const StepFunction& a, const StepFunction& b);

private:
    std::vector<Rational> values_;
};

/// (1/m) * sum f_i g_i; throws if cell counts differ.
Rational inner(const StepFunction& f, const StepFunction& g);

/// One maximal (non-negative run, non-positive run) block of g.
struct Block {
    int first = 0, last = 0;       // inclusive cell range
    Rational sum;                  // plain cell-value sum over the block
    Rational inner_with_f;         // (1/m) * sum_{block} f_i g_i
};

struct RearrangementReport {
    Rational diff_norm_sq;         // ||f - g||^2
    Rational f_norm_sq;            // ||f||^2
    Rational g_norm_sq;            // ||g||^2
    Rational inner_fg;             // <f, g>
    bool inequality_holds = false; // ||f - g||^2 >= ||f||^2 + ||g||^2
    bool inner_nonpositive = false;
    bool decomposable = false;     // every greedy block sums to zero
    std::vector<Block> blocks;
};

/// Checks the rearrangement inequality machinery for a non-negative,
/// non-decreasing f and a zero-integral g on the same cells.  g is cut
/// greedily into maximal (non-negative run, non-positive run) blocks; a new
/// block starts at the first strictly positive cell after a non-positive run.
/// If some block has a non-zero sum the report flags the function as not
/// block-decomposable but all norms are still returned.
///
/// Precondition violations raise std::invalid_argument with distinct
/// messages: mismatched cell counts, f negative, f decreasing, g integral
/// non-zero.
RearrangementReport rearrangement_check(const StepFunction& f, const StepFunction& g);

}  // namespace phirho
