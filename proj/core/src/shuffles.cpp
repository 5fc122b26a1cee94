#include "phirho/shuffles.hpp"

#include <stdexcept>
#include <string>

namespace phirho {

Permutation Permutation::validated(int n, std::vector<int> one_based) {
    if (n < 1) throw std::invalid_argument("permutation: n must be positive");
    if (static_cast<int>(one_based.size()) != n)
        throw std::invalid_argument("permutation: image has wrong length");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : one_based) {
        if (v < 1 || v > n)
            throw std::invalid_argument("permutation: image value " + std::to_string(v) +
                                        " out of range");
        if (seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("permutation: image value " + std::to_string(v) +
                                        " repeated");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    return Permutation(std::move(one_based));
}

bool Permutation::is_involution() const {
    const int n = size();
    for (int i = 1; i <= n; ++i)
        if ((*this)((*this)(i)) != i) return false;
    return true;
}

bool Permutation::is_identity() const {
    const int n = size();
    for (int i = 1; i <= n; ++i)
        if ((*this)(i) != i) return false;
    return true;
}

Involution Involution::validated(int n, std::vector<int> one_based) {
    return from_permutation(Permutation::validated(n, std::move(one_based)));
}

Involution Involution::from_permutation(const Permutation& p) {
    if (!p.is_involution()) throw std::invalid_argument("involution: pi(pi(i)) != i");
    return Involution(p);
}

IndexClasses classify(const Permutation& p) {
    IndexClasses c;
    const int n = p.size();
    for (int i = 1; i <= n; ++i) {
        const int d = i - p(i);
        if (d > 0)
            c.minus.push_back(i);
        else if (d == 0)
            c.zero.push_back(i);
        else
            c.plus.push_back(i);
    }
    return c;
}

Rational shuffle_phi(const Permutation& p) {
    const int n = p.size();
    // 1 - (6/n) * sum_{i < pi(i)} (pi(i) - i)/n
    long acc = 0;
    for (int i = 1; i <= n; ++i)
        if (i < p(i)) acc += p(i) - i;
    return Rational(1) - Rational(6 * acc, static_cast<long>(n) * n);
}

Rational shuffle_rho(const Permutation& p) {
    const int n = p.size();
    // 1 - (12/n) * sum_i i*(i - pi(i))/n^2
    long acc = 0;
    for (int i = 1; i <= n; ++i) acc += static_cast<long>(i) * (i - p(i));
    return Rational(1) - Rational(12 * acc, static_cast<long>(n) * n * n);
}

Rational shuffle_rho(const Involution& p) {
    const int n = p.size();
    // 1 - (12/n) * sum_{i < pi(i)} ((pi(i) - i)/n)^2
    long acc = 0;
    for (int i = 1; i <= n; ++i)
        if (i < p(i)) {
            const long d = p(i) - i;
            acc += d * d;
        }
    return Rational(1) - Rational(12 * acc, static_cast<long>(n) * n * n);
}

bool attains_upper_bound(const Involution& p) {
    const int n = p.size();
    long common = -1;
    int descending = 0;
    for (int i = 1; i <= n; ++i) {
        const long d = i - p(i);
        if (d <= 0) continue;
        ++descending;
        if (common < 0)
            common = d;
        else if (d != common)
            return false;
    }
    if (descending == 0) return true;  // identity sits at (1, 1)
    return 2 * descending == n;
}

Involution adjacent_swap_involution(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("adjacent swap involution: n must be even and >= 2");
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int j = 1; j <= n / 2; ++j) {
        image[static_cast<std::size_t>(2 * j - 2)] = 2 * j;
        image[static_cast<std::size_t>(2 * j - 1)] = 2 * j - 1;
    }
    return Involution::validated(n, std::move(image));
}

namespace {

void extend_involution(int n, std::vector<int>& image,
                       const std::function<void(const Involution&)>& fn) {
    int i = 0;
    while (i < n && image[static_cast<std::size_t>(i)] != 0) ++i;
    if (i == n) {
        fn(Involution::validated(n, image));
        return;
    }
    // Fixed point first: keeps the image vectors in lexicographic order.
    image[static_cast<std::size_t>(i)] = i + 1;
    extend_involution(n, image, fn);
    image[static_cast<std::size_t>(i)] = 0;
    for (int j = i + 1; j < n; ++j) {
        if (image[static_cast<std::size_t>(j)] != 0) continue;
        image[static_cast<std::size_t>(i)] = j + 1;
        image[static_cast<std::size_t>(j)] = i + 1;
        extend_involution(n, image, fn);
        image[static_cast<std::size_t>(i)] = 0;
        image[static_cast<std::size_t>(j)] = 0;
    }
}

}  // namespace

void for_each_involution(int n, const std::function<void(const Involution&)>& fn) {
    if (n < 1) throw std::invalid_argument("involution enumeration: n must be positive");
    std::vector<int> image(static_cast<std::size_t>(n), 0);
    extend_involution(n, image, fn);
}

std::vector<Involution> all_involutions(int n) {
    std::vector<Involution> out;
    for_each_involution(n, [&](const Involution& p) { out.push_back(p); });
    return out;
}

std::uint64_t involution_count(int n) {
    if (n < 0) throw std::invalid_argument("involution count: n must be non-negative");
    std::uint64_t prev = 1, cur = 1;  // a(0), a(1)
    if (n <= 1) return 1;
    for (int k = 2; k <= n; ++k) {
        const std::uint64_t next = cur + static_cast<std::uint64_t>(k - 1) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace phirho
