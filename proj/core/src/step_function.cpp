#include "phirho/step_function.hpp"

#include <stdexcept>
#include <string>

namespace phirho {

StepFunction::StepFunction(std::vector<Rational> values) : values_(std::move(values)) {
    if (values_.empty())
        throw std::invalid_argument("step function: needs at least one cell");
}

Rational StepFunction::integral() const {
    Rational s;
    for (const auto& v : values_) s += v;
    return s / Rational(cells());
}

Rational StepFunction::norm_sq() const {
    Rational s;
    for (const auto& v : values_) s += v * v;
    return s / Rational(cells());
}

StepFunction operator-(const StepFunction& a, const StepFunction& b) {
    if (a.cells() != b.cells())
        throw std::invalid_argument("step function: cell counts differ");
    std::vector<Rational> out;
    out.reserve(a.values_.size());
    for (int i = 0; i < a.cells(); ++i) out.push_back(a.values_[i] - b.values_[i]);
    return StepFunction(std::move(out));
}

Rational inner(const StepFunction& f, const StepFunction& g) {
    if (f.cells() != g.cells())
        throw std::invalid_argument("step function: cell counts differ");
    Rational s;
    for (int i = 0; i < f.cells(); ++i) s += f[i] * g[i];
    return s / Rational(f.cells());
}

RearrangementReport rearrangement_check(const StepFunction& f, const StepFunction& g) {
    const int m = f.cells();
    if (m != g.cells())
        throw std::invalid_argument("rearrangement check: cell counts differ");
    for (int i = 0; i < m; ++i)
        if (f[i].sign() < 0)
            throw std::invalid_argument("rearrangement check: f negative at cell " +
                                        std::to_string(i));
    for (int i = 1; i < m; ++i)
        if (f[i] < f[i - 1])
            throw std::invalid_argument("rearrangement check: f decreasing at cell " +
                                        std::to_string(i));
    if (g.integral() != 0)
        throw std::invalid_argument("rearrangement check: g has non-zero integral");

    RearrangementReport rep;
    rep.f_norm_sq = f.norm_sq();
    rep.g_norm_sq = g.norm_sq();
    rep.diff_norm_sq = (f - g).norm_sq();
    rep.inner_fg = inner(f, g);
    rep.inner_nonpositive = rep.inner_fg.sign() <= 0;
    rep.inequality_holds = rep.diff_norm_sq >= rep.f_norm_sq + rep.g_norm_sq;

    // Greedy maximal blocks: absorb a non-negative run, then a non-positive
    // run; the next strictly positive cell opens the following block.
    rep.decomposable = true;
    int i = 0;
    while (i < m) {
        Block blk;
        blk.first = i;
        while (i < m && g[i].sign() >= 0) ++i;
        while (i < m && g[i].sign() <= 0) ++i;
        blk.last = i - 1;
        Rational cell_inner;
        for (int j = blk.first; j <= blk.last; ++j) {
            blk.sum += g[j];
            cell_inner += f[j] * g[j];
        }
        blk.inner_with_f = cell_inner / Rational(m);
        if (blk.sum != 0) rep.decomposable = false;
        rep.blocks.push_back(std::move(blk));
    }
    return rep;
}

}  // namespace phirho
