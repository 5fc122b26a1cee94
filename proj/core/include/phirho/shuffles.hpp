#pragma once

// Straight shuffles of Min, encoded by the permutation that orders their
// vertical strips.  All index arithmetic is 1-based to match the usual
// permutation conventions; storage is 0-based internally.

#include <cstdint>
#include <functional>
#include <vector>

#include "phirho/rational.hpp"

namespace phirho {

class Permutation {
  public:
    // Validates that `one_based` is a bijection of {1,...,n}.
    static Permutation validated(int n, std::vector<int> one_based);

    int size() const { return static_cast<int>(image_.size()); }
    // pi(i) for i in 1..n.
    int operator()(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& image() const { return image_; }

    bool is_involution() const;
    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

  protected:
    explicit Permutation(std::vector<int> image) : image_(std::move(image)) {}

  private:
    std::vector<int> image_;
};

// A Permutation known to satisfy pi(pi(i)) == i.
class Involution : public Permutation {
  public:
    static Involution validated(int n, std::vector<int> one_based);
    static Involution from_permutation(const Permutation& p);

  private:
    explicit Involution(Permutation p) : Permutation(std::move(p)) {}
};

// Indices split by which way pi moves them: minus collects the strips moved
// left (pi(i) < i), plus the ones moved right.
struct IndexClasses {
    std::vector<int> minus;  // pi(i) < i
    std::vector<int> zero;   // pi(i) == i
    std::vector<int> plus;   // pi(i) > i
};

IndexClasses classify(const Permutation& p);

// Footrule coefficient of the shuffle with strip order pi.
Rational shuffle_phi(const Permutation& p);

// Spearman's rho of the shuffle; the involution overload uses the shorter
// displacement form, the general one the full rank sum.  They agree on
// involutions.
Rational shuffle_rho(const Permutation& p);
Rational shuffle_rho(const Involution& p);

// True when (phi, rho) of the shuffle sits on the upper boundary of the
// region.  For involutions this happens exactly when either the involution is
// the identity or the displacement i - pi(i) is constant over the descending
// indices and those make up half of {1,...,n}.
bool attains_upper_bound(const Involution& p);

// The star shuffle on n = 2N strips: swaps (1 2)(3 4)...(n-1 n).
Involution adjacent_swap_involution(int n);

// Enumeration of all involutions of {1,...,n} in lexicographic order of the
// image vector.  `for_each_involution` streams them to avoid materialising
// large sets; `all_involutions` collects (fine for n <= 10 or so).
void for_each_involution(int n, const std::function<void(const Involution&)>& fn);
std::vector<Involution> all_involutions(int n);

// Number of involutions of {1,...,n} (telephone numbers).
std::uint64_t involution_count(int n);

}  // namespace phirho
