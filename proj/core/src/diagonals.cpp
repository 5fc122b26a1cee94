#include "phirho/diagonals.hpp"

#include <algorithm>
#include <stdexcept>

namespace phirho {

namespace {

Rational eval_pl(const std::vector<Rational>& xs, const std::vector<Rational>& ys,
                 const Rational& t) {
    if (t < xs.front() || t > xs.back())
        throw std::invalid_argument("diagonal: argument outside [0,1]");
    // Last piece owns its right endpoint; otherwise the piece with t < hi.
    for (std::size_t j = 0; j + 1 < xs.size(); ++j) {
        if (t < xs[j + 1] || j + 2 == xs.size()) {
            const Rational run = xs[j + 1] - xs[j];
            return ys[j] + (ys[j + 1] - ys[j]) * (t - xs[j]) / run;
        }
    }
    return ys.back();  // unreachable
}

// min{z : f(z) >= c} for a non-decreasing piecewise-linear f given by
// (xs, ys); requires c <= max f.
Rational min_with_value_at_least(const std::vector<Rational>& xs,
                                 const std::vector<Rational>& ys, const Rational& c) {
    if (c <= ys.front()) return xs.front();
    for (std::size_t j = 0; j + 1 < xs.size(); ++j) {
        if (ys[j + 1] >= c) {
            // Here ys[j] < c <= ys[j+1], so the piece rises.
            const Rational rise = ys[j + 1] - ys[j];
            return xs[j] + (c - ys[j]) * (xs[j + 1] - xs[j]) / rise;
        }
    }
    throw std::invalid_argument("generalized inverse: level above the function range");
}

// max{t : f(t) <= c} for a non-decreasing piecewise-linear f; requires
// c >= min f.
Rational max_with_value_at_most(const std::vector<Rational>& xs,
                                const std::vector<Rational>& ys, const Rational& c) {
    if (c >= ys.back()) return xs.back();
    for (std::size_t j = xs.size() - 1; j-- > 0;) {
        if (ys[j] <= c) {
            // Here ys[j] <= c < ys[j+1], so the piece rises.
            const Rational rise = ys[j + 1] - ys[j];
            return xs[j] + (c - ys[j]) * (xs[j + 1] - xs[j]) / rise;
        }
    }
    throw std::invalid_argument("generalized inverse: level below the function range");
}

std::vector<Rational> g_values(const Diagonal& d) {
    std::vector<Rational> g;
    g.reserve(d.breakpoints().size());
    for (std::size_t j = 0; j < d.breakpoints().size(); ++j)
        g.push_back(Rational(2) * d.breakpoints()[j] - d.values()[j]);
    return g;
}

}  // namespace

Diagonal Diagonal::validated(std::vector<Rational> breakpoints, std::vector<Rational> values) {
    if (breakpoints.size() < 2 || breakpoints.size() != values.size())
        throw std::invalid_argument("diagonal: need matching breakpoint/value sequences");
    if (breakpoints.front() != Rational(0) || breakpoints.back() != Rational(1))
        throw std::invalid_argument("diagonal: breakpoints must run from 0 to 1");
    for (std::size_t j = 0; j + 1 < breakpoints.size(); ++j)
        if (!(breakpoints[j] < breakpoints[j + 1]))
            throw std::invalid_argument("diagonal: breakpoints must increase strictly");
    if (values.front() != Rational(0) || values.back() != Rational(1))
        throw std::invalid_argument("diagonal: endpoint values must be 0 and 1");
    for (std::size_t j = 0; j + 1 < breakpoints.size(); ++j) {
        const Rational rise = values[j + 1] - values[j];
        if (rise.sign() < 0)
            throw std::invalid_argument("diagonal: values must be non-decreasing");
        const Rational run = breakpoints[j + 1] - breakpoints[j];
        if (rise > Rational(2) * run)
            throw std::invalid_argument("diagonal: slope exceeds 2");
    }
    for (std::size_t j = 0; j < breakpoints.size(); ++j)
        if (values[j] > breakpoints[j])
            throw std::invalid_argument("diagonal: values must stay below the identity");
    return Diagonal(std::move(breakpoints), std::move(values));
}

Rational Diagonal::operator()(const Rational& t) const { return eval_pl(breakpoints_, values_, t); }

Rational Diagonal::piece_slope(std::size_t j) const {
    return (values_[j + 1] - values_[j]) / (breakpoints_[j + 1] - breakpoints_[j]);
}

ZeroTwoDiagonal ZeroTwoDiagonal::validated(int n, std::vector<int> slopes) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("zero-two diagonal: n must be even and positive");
    if (static_cast<int>(slopes.size()) != n)
        throw std::invalid_argument("zero-two diagonal: slope sequence has wrong length");
    int twos = 0;
    for (int i = 0; i < n; ++i) {
        if (slopes[static_cast<std::size_t>(i)] == 2)
            ++twos;
        else if (slopes[static_cast<std::size_t>(i)] != 0)
            throw std::invalid_argument("zero-two diagonal: slopes must be 0 or 2");
        if (2 * twos > i + 1)
            throw std::invalid_argument("zero-two diagonal: prefix constraint violated");
    }
    if (2 * twos != n)
        throw std::invalid_argument("zero-two diagonal: needs n/2 slope-2 cells");
    return ZeroTwoDiagonal(std::move(slopes));
}

ZeroTwoDiagonal ZeroTwoDiagonal::from_pattern(int n, std::string_view pattern) {
    std::vector<int> slopes;
    slopes.reserve(pattern.size());
    for (char c : pattern) {
        if (c != '0' && c != '2')
            throw std::invalid_argument("zero-two diagonal: pattern must be '0'/'2' characters");
        slopes.push_back(c == '2' ? 2 : 0);
    }
    return validated(n, std::move(slopes));
}

std::string ZeroTwoDiagonal::pattern() const {
    std::string out;
    out.reserve(slopes_.size());
    for (int s : slopes_) out.push_back(s == 2 ? '2' : '0');
    return out;
}

Diagonal ZeroTwoDiagonal::as_diagonal() const {
    const int n = cells();
    std::vector<Rational> xs, ys;
    xs.reserve(static_cast<std::size_t>(n) + 1);
    ys.reserve(static_cast<std::size_t>(n) + 1);
    int running = 0;
    xs.emplace_back(0);
    ys.emplace_back(0);
    for (int i = 0; i < n; ++i) {
        running += slopes_[static_cast<std::size_t>(i)];
        xs.push_back(Rational(i + 1, n));
        ys.push_back(Rational(running, n));
    }
    return Diagonal::validated(std::move(xs), std::move(ys));
}

namespace {

ZeroTwoDiagonal approximation_from_samples(const std::vector<Rational>& y, int N) {
    const int cells = 2 * N;
    std::vector<int> slopes(static_cast<std::size_t>(cells), 0);
    int cursor = 1;
    for (int k = 1; k <= N; ++k) {
        const Rational level(k, N);
        int ik = 0;
        for (int i = cursor; i <= cells; ++i) {
            if (y[static_cast<std::size_t>(i)] >= level) {
                ik = i;
                break;
            }
        }
        if (ik == 0)
            throw std::invalid_argument("zero-two approximation: samples never reach 1");
        slopes[static_cast<std::size_t>(ik - 1)] = 2;
        cursor = ik + 1;  // the i_k are strictly increasing for 2-Lipschitz data
    }
    return ZeroTwoDiagonal::validated(cells, std::move(slopes));
}

}  // namespace

ZeroTwoDiagonal zero_two_approximation(const Diagonal& d, int N) {
    if (N < 1) throw std::invalid_argument("zero-two approximation: N must be positive");
    std::vector<Rational> y;
    y.reserve(static_cast<std::size_t>(2 * N) + 1);
    for (int i = 0; i <= 2 * N; ++i) y.push_back(d(Rational(i, 2 * N)));
    return approximation_from_samples(y, N);
}

ZeroTwoDiagonal zero_two_approximation(const std::function<Rational(const Rational&)>& d,
                                       int N) {
    if (N < 1) throw std::invalid_argument("zero-two approximation: N must be positive");
    std::vector<Rational> y;
    y.reserve(static_cast<std::size_t>(2 * N) + 1);
    for (int i = 0; i <= 2 * N; ++i) y.push_back(d(Rational(i, 2 * N)));
    return approximation_from_samples(y, N);
}

Rational diagonal_cdf(const Diagonal& d, const Rational& u, const Rational& v) {
    if (u.sign() < 0 || v.sign() < 0 || u > Rational(1) || v > Rational(1))
        throw std::invalid_argument("diagonal copula: arguments outside [0,1]");
    return min(min(u, v), (d(u) + d(v)) / Rational(2));
}

KernelAtom diagonal_kernel(const Diagonal& d, const Rational& t) {
    if (!(t > Rational(0)) || !(t < Rational(1)))
        throw std::invalid_argument("diagonal kernel: t must lie in (0,1)");
    std::size_t piece = 0;
    bool interior = false;
    for (std::size_t j = 0; j + 1 < d.breakpoints().size(); ++j) {
        if (t == d.breakpoints()[j] || t == d.breakpoints()[j + 1]) break;
        if (t > d.breakpoints()[j] && t < d.breakpoints()[j + 1]) {
            piece = j;
            interior = true;
            break;
        }
    }
    if (!interior)
        throw std::invalid_argument("diagonal kernel: t sits on a breakpoint");

    const auto g = g_values(d);
    KernelAtom atom;
    atom.t = t;
    const Rational delta_t = d(t);
    const Rational g_t = Rational(2) * t - delta_t;
    atom.lower = min_with_value_at_least(d.breakpoints(), g, delta_t);
    atom.upper = min_with_value_at_least(d.breakpoints(), d.values(), g_t);
    atom.weight_lower = d.piece_slope(piece) / Rational(2);
    return atom;
}

Rational disintegration_cdf(const Diagonal& d, const Rational& u, const Rational& v) {
    if (u.sign() < 0 || v.sign() < 0 || u > Rational(1) || v > Rational(1))
        throw std::invalid_argument("diagonal copula: arguments outside [0,1]");
    // The lower support branch lies below v exactly on an initial interval
    // [0, tau_lo], and likewise the upper branch on [0, tau_up]; integrating
    // the fibre weights slope/2 and 1 - slope/2 over those intervals gives
    // telescoping sums in closed form.
    const auto g = g_values(d);
    const Rational g_v = Rational(2) * v - d(v);
    const Rational tau_lo = max_with_value_at_most(d.breakpoints(), d.values(), g_v);
    const Rational tau_up = max_with_value_at_most(d.breakpoints(), g, d(v));
    const Rational a = min(u, tau_lo);
    const Rational b = min(u, tau_up);
    return d(a) / Rational(2) + b - d(b) / Rational(2);
}

Involution diagonal_to_shuffle(const ZeroTwoDiagonal& d) {
    const int n = d.cells();
    std::vector<int> left, right;  // 1-based cell indices with slope 2 / 0
    for (int i = 1; i <= n; ++i) {
        if (d.slopes()[static_cast<std::size_t>(i - 1)] == 2)
            left.push_back(i);
        else
            right.push_back(i);
    }
    std::vector<int> image(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < left.size(); ++k) {
        image[static_cast<std::size_t>(left[k] - 1)] = right[k];
        image[static_cast<std::size_t>(right[k] - 1)] = left[k];
    }
    return Involution::validated(n, std::move(image));
}

ZeroTwoDiagonal shuffle_to_diagonal(const Involution& p) {
    const int n = p.size();
    std::vector<int> slopes(static_cast<std::size_t>(n), 0);
    int prev_image = 0;
    for (int i = 1; i <= n; ++i) {
        if (p(i) == i)
            throw std::invalid_argument("shuffle to diagonal: fixed points present");
        if (p(i) < i) {
            slopes[static_cast<std::size_t>(i - 1)] = 2;
            if (p(i) <= prev_image)
                throw std::invalid_argument(
                    "shuffle to diagonal: not increasing on the strips moved left");
            prev_image = p(i);
        }
    }
    return ZeroTwoDiagonal::validated(n, std::move(slopes));
}

bool pointwise_leq(const Diagonal& a, const Diagonal& b) {
    std::vector<Rational> cuts = a.breakpoints();
    cuts.insert(cuts.end(), b.breakpoints().begin(), b.breakpoints().end());
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (const auto& t : cuts)
        if (a(t) > b(t)) return false;
    return true;
}

Rational sup_distance(const Diagonal& a, const Diagonal& b) {
    std::vector<Rational> cuts = a.breakpoints();
    cuts.insert(cuts.end(), b.breakpoints().begin(), b.breakpoints().end());
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    Rational best;
    for (const auto& t : cuts) best = max(best, abs(a(t) - b(t)));
    return best;
}

}  // namespace phirho
