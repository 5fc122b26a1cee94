#include "phirho/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace phirho {

DisplacementVector displacement_vector(const Involution& p) {
    const int n = p.size();
    DisplacementVector pv;
    pv.n = n;
    std::vector<long> raw;
    for (int i = 1; i <= n; ++i)
        if (p(i) < i) raw.push_back(i - p(i));
    std::sort(raw.begin(), raw.end());
    pv.k = static_cast<int>(raw.size());
    for (long d : raw) {
        pv.entries.emplace_back(d, n);
        pv.total += d;
    }
    return pv;
}

LowerSlack lower_bound_slack(int n, const DisplacementVector& pv) {
    Rational sum, sum_sq;
    for (const auto& e : pv.entries) {
        sum += e;
        sum_sq += e * e;
    }
    LowerSlack slack;
    slack.linear_term = Rational(1) - Rational(6, n) * sum_sq;
    slack.power_arg = Rational(1) - Rational(4, n) * sum;
    if (slack.power_arg.sign() < 0)
        throw std::invalid_argument("lower-bound slack: displacement exceeds n^2/4");
    if (slack.linear_term.sign() < 0) {
        slack.sign = -1;
    } else {
        const Rational lhs = slack.linear_term * slack.linear_term;
        const Rational rhs = pow_ui(slack.power_arg, 3);
        slack.sign = lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
    }
    slack.value =
        slack.linear_term.to_double() - std::pow(slack.power_arg.to_double(), 1.5);
    return slack;
}

LowerSlack lower_bound_slack(const Involution& p) {
    return lower_bound_slack(p.size(), displacement_vector(p));
}

Involution canonical_rearrangement(const Involution& p) {
    const int n = p.size();
    const long delta = displacement_vector(p).total;
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 1);
    auto pair_up = [&](int a, int b) {
        image[static_cast<std::size_t>(a - 1)] = b;
        image[static_cast<std::size_t>(b - 1)] = a;
    };
    if (delta == 0) return Involution::validated(n, std::move(image));
    if (delta < n - 1) {
        pair_up(n, n - static_cast<int>(delta));
        return Involution::validated(n, std::move(image));
    }
    // ell = max{j : j*n - j^2 <= delta}; the partial sums of the maximal
    // nest n-1, n-3, ... telescope to j*n - j^2 and grow only up to j = n/2,
    // which caps the scan (delta <= n^2/4 for involutions).
    int ell = 1;
    while (ell + 1 <= n / 2 &&
           static_cast<long>(ell + 1) * n - static_cast<long>(ell + 1) * (ell + 1) <= delta)
        ++ell;
    const long delta_star = static_cast<long>(ell) * n - static_cast<long>(ell) * ell;
    const long rest = delta - delta_star;
    if (rest > 0) {
        const int k_hat = ell + 1;
        for (int i = 1; i < k_hat; ++i) pair_up(n - i + 1, i);
        const int inner = n - k_hat + 1;
        if (rest > inner - 1 - (k_hat - 1))
            throw std::logic_error("canonical rearrangement: displacement bound breached");
        pair_up(inner, inner - static_cast<int>(rest));
    } else {
        for (int i = 1; i <= ell; ++i) pair_up(n - i + 1, i);
    }
    return Involution::validated(n, std::move(image));
}

RearrangeClass rearrangement_class(const Involution& p) {
    const int n = p.size();
    std::vector<int> left;
    for (int i = 1; i <= n; ++i)
        if (p(i) < i) left.push_back(i);
    const int k = static_cast<int>(left.size());
    if (k == 1 && left[0] == n) return RearrangeClass::terminal_swap;
    if (k >= 2) {
        for (int j = 0; j < k; ++j)
            if (left[static_cast<std::size_t>(j)] != n - k + 1 + j) return RearrangeClass::none;
        for (int i = 1; i < k; ++i)
            if (p(n - i + 1) != i) return RearrangeClass::none;
        const int d0 = (n - k + 1) - p(n - k + 1);
        if (d0 >= 1 && d0 <= n - (2 * k - 1)) return RearrangeClass::nested_block;
    }
    return RearrangeClass::none;
}

std::string to_string(RearrangeClass c) {
    switch (c) {
        case RearrangeClass::terminal_swap: return "terminal-swap";
        case RearrangeClass::nested_block: return "nested-block";
        default: return "none";
    }
}

std::pair<StepFunction, StepFunction> rearrangement_steps(const Involution& p) {
    const DisplacementVector pv = displacement_vector(p);
    if (pv.k == 0)
        throw std::invalid_argument("rearrangement steps: zero total displacement");
    const DisplacementVector pv_hat = displacement_vector(canonical_rearrangement(p));
    if (pv_hat.k > pv.k)
        throw std::logic_error("rearrangement steps: rearrangement grew the support");
    const Rational scale(pv.k, pv.n);
    std::vector<Rational> f_cells, fhat_cells;
    for (const auto& e : pv.entries) f_cells.push_back(scale * e);
    for (int i = 0; i < pv.k - pv_hat.k; ++i) fhat_cells.emplace_back(0);
    for (const auto& e : pv_hat.entries) fhat_cells.push_back(scale * e);
    StepFunction f{std::move(f_cells)};
    StepFunction f_hat{std::move(fhat_cells)};
    return {f, f - f_hat};
}

}  // namespace phirho
