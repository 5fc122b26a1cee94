#include "phirho/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "phirho/bounds.hpp"
#include "phirho/diagonals.hpp"
#include "phirho/families.hpp"
#include "phirho/grid_oracle.hpp"
#include "phirho/rearrange.hpp"
#include "phirho/segment_map.hpp"
#include "phirho/shuffles.hpp"
#include "phirho/step_function.hpp"

namespace phirho {

namespace {

std::string perm_str(const Permutation& p) {
    std::ostringstream out;
    out << '(';
    for (int i = 1; i <= p.size(); ++i) {
        if (i > 1) out << ',';
        out << p(i);
    }
    out << ')';
    return out.str();
}

// Failure collector: keeps the first counterexample only.
class Checker {
  public:
    explicit Checker(std::string name) : name_(std::move(name)) {}

    void expect(bool ok, const std::string& what) {
        if (!ok && bad_.empty()) bad_ = what;
    }
    bool clean() const { return bad_.empty(); }

    CheckResult result(const std::string& pass_detail) const {
        if (bad_.empty()) return CheckResult{name_, true, pass_detail};
        return CheckResult{name_, false, bad_};
    }

  private:
    std::string name_;
    std::string bad_;
};

Rational pl_integral(const Diagonal& d) {
    const auto& xs = d.breakpoints();
    const auto& ys = d.values();
    Rational acc(0);
    for (std::size_t j = 0; j + 1 < xs.size(); ++j)
        acc += (xs[j + 1] - xs[j]) * (ys[j] + ys[j + 1]) / Rational(2);
    return acc;
}

bool same_diagonal(const Diagonal& a, const Diagonal& b) {
    return a.breakpoints() == b.breakpoints() && a.values() == b.values();
}

// Support branches of the rising-diagonal copula, derived from its kernel:
// the slope-1 stretch of the diagonal splits its fibre half/half between the
// two generalized inverses, the outer stretches transport all mass.
std::vector<WeightedBranch> rising_branches(const Rational& a) {
    const Rational half(1, 2);
    const Rational one(1);
    std::vector<WeightedBranch> out;
    auto push = [&out](Rational lo, Rational hi, Rational slope, Rational intercept, Rational w) {
        if (lo < hi) out.push_back(WeightedBranch{std::move(lo), std::move(hi), std::move(slope),
                                                  std::move(intercept), std::move(w)});
    };
    push(Rational(0), half - a, Rational(2), a, one);        // h = 2t + a
    push(half - a, a, one, half, one);                       // h = t + 1/2
    push(a, one - a, half, -a / Rational(2), half);          // h = (t - a)/2
    push(a, one - a, half, (a + one) / Rational(2), half);   // h = (t + a + 1)/2
    push(one - a, half + a, one, -half, one);                // h = t - 1/2
    push(half + a, one, Rational(2), -one - a, one);         // h = 2t - 1 - a
    return out;
}

// Valid slope patterns of length n: n/2 twos, every prefix of length l
// holding at most l/2 of them.
void extend_patterns(std::string& cur, int twos, int n, std::vector<std::string>& out) {
    const int i = static_cast<int>(cur.size());
    if (i == n) {
        if (2 * twos == n) out.push_back(cur);
        return;
    }
    cur.push_back('0');
    extend_patterns(cur, twos, n, out);
    cur.back() = '2';
    if (2 * (twos + 1) <= i + 1 && 2 * (twos + 1) <= n) extend_patterns(cur, twos + 1, n, out);
    cur.pop_back();
}

std::vector<std::string> all_patterns(int n) {
    std::vector<std::string> out;
    std::string cur;
    extend_patterns(cur, 0, n, out);
    return out;
}

long catalan(int k) {
    long c = 1;
    for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

// All pairings sigma: left -> right with sigma(l) < l, as partner vectors
// aligned with `left`.
void for_each_pairing(const std::vector<int>& left, const std::vector<int>& right,
                      std::size_t idx, std::vector<int>& partner, std::vector<bool>& used,
                      const std::function<void(const std::vector<int>&)>& fn) {
    if (idx == left.size()) {
        fn(partner);
        return;
    }
    for (std::size_t j = 0; j < right.size(); ++j) {
        if (used[j] || right[j] >= left[idx]) continue;
        used[j] = true;
        partner[idx] = right[j];
        for_each_pairing(left, right, idx + 1, partner, used, fn);
        used[j] = false;
    }
}

}  // namespace

CheckResult check_involution_bounds(int n_min, int n_max) {
    Checker ck("involution-bounds");
    long total = 0;
    for (int n = n_min; n <= n_max; ++n) {
        std::uint64_t count = 0;
        for_each_involution(n, [&](const Involution& p) {
            ++count;
            ++total;
            if (!ck.clean()) return;
            const Rational phi = shuffle_phi(p);
            const Rational rho = shuffle_rho(p);
            const Rational rho_general = shuffle_rho(static_cast<const Permutation&>(p));
            const std::string at = " at n=" + std::to_string(n) + " pi=" + perm_str(p);
            ck.expect(rho == rho_general, "rho formulas disagree" + at);
            ck.expect(phi >= Rational(-1, 2) && phi <= Rational(1), "phi out of range" + at);
            ck.expect(rho >= Rational(-1) && rho <= Rational(1), "rho out of range" + at);
            const RegionPoint pt = make_region_point(phi, rho);
            ck.expect(check_upper(pt) != BoundCheck::violated, "upper bound violated" + at);
            ck.expect(check_lower(pt) != BoundCheck::violated, "lower bound violated" + at);
        });
        ck.expect(count == involution_count(n),
                  "involution count mismatch at n=" + std::to_string(n) + ": enumerated " +
                      std::to_string(count) + ", recurrence " + std::to_string(involution_count(n)));
    }
    return ck.result(std::to_string(total) + " involutions over n=" + std::to_string(n_min) +
                     ".." + std::to_string(n_max) + ", both bounds exact");
}

CheckResult check_upper_equality_set(int n_min, int n_max) {
    Checker ck("upper-equality-set");
    long total = 0;
    long attained_total = 0;
    for (int n = n_min; n <= n_max; ++n) {
        for_each_involution(n, [&](const Involution& p) {
            ++total;
            if (!ck.clean()) return;
            const Rational phi = shuffle_phi(p);
            const Rational rho = shuffle_rho(p);
            const bool attained = check_upper(make_region_point(phi, rho)) == BoundCheck::equality;
            const bool flagged = attains_upper_bound(p);
            // Independent route: the characterization computed from scratch.
            const IndexClasses cls = classify(p);
            bool constant = true;
            for (std::size_t j = 1; j < cls.minus.size(); ++j) {
                const int d0 = cls.minus[0] - p(cls.minus[0]);
                const int dj = cls.minus[j] - p(cls.minus[j]);
                if (dj != d0) constant = false;
            }
            const bool literal = !cls.minus.empty() && constant &&
                                 2 * static_cast<int>(cls.minus.size()) == n;
            const bool expected = literal || p.is_identity();
            const std::string at = " at n=" + std::to_string(n) + " pi=" + perm_str(p);
            ck.expect(flagged == expected, "flag disagrees with characterization" + at);
            ck.expect(attained == flagged, "equality set mismatch" + at);
            if (attained) ++attained_total;
        });
    }
    return ck.result(std::to_string(total) + " involutions, " + std::to_string(attained_total) +
                     " on the upper bound, sets coincide");
}

CheckResult check_adjacent_swap_touch(int n_max) {
    Checker ck("adjacent-swap-touch");
    int checked = 0;
    for (int n = 2; n <= n_max; n += 2) {
        const Involution s = adjacent_swap_involution(n);
        const Rational phi = shuffle_phi(s);
        const Rational rho = shuffle_rho(s);
        const std::string at = " at n=" + std::to_string(n);
        ck.expect(phi == Rational(1) - Rational(3, n), "phi closed form fails" + at);
        ck.expect(rho == Rational(1) - Rational(6, static_cast<long>(n) * n),
                  "rho closed form fails" + at);
        ck.expect(attains_upper_bound(s), "upper-bound flag not set" + at);
        ck.expect(check_upper(make_region_point(phi, rho)) == BoundCheck::equality,
                  "upper bound not attained" + at);
        ck.expect(upper_bound(phi) == rho, "upper curve misses the point" + at);
        const EnvelopeValue r = reference_envelope(phi);
        const EnvelopeValue sv = refined_envelope(phi);
        ck.expect(r.compare(rho) == std::strong_ordering::equal,
                  "reference envelope misses the knot" + at);
        ck.expect(sv.compare(rho) == std::strong_ordering::equal,
                  "refined envelope misses the knot" + at);
        ++checked;
    }
    return ck.result(std::to_string(checked) + " adjacent-swap involutions touch the bound");
}

CheckResult check_oracle_agreement(int per_n, int n_min, int n_max, int resolution,
                                   std::uint64_t seed) {
    Checker ck("oracle-agreement");
    std::mt19937_64 rng(seed);
    const GridOracleConfig cfg{resolution};
    int checked = 0;
    for (int n = n_min; n <= n_max && ck.clean(); ++n) {
        std::vector<int> image(static_cast<std::size_t>(n));
        std::iota(image.begin(), image.end(), 1);
        for (int rep = 0; rep < per_n && ck.clean(); ++rep) {
            std::shuffle(image.begin(), image.end(), rng);
            const Permutation p = Permutation::validated(n, image);
            const std::string at = " at n=" + std::to_string(n) + " pi=" + perm_str(p);
            const Rational phi = shuffle_phi(p);
            const Rational rho = shuffle_rho(p);
            const SegmentMap sm = shuffle_support(p);
            ck.expect(phi_exact(sm) == phi, "phi integration route disagrees" + at);
            ck.expect(rho_exact(sm) == rho, "rho integration route disagrees" + at);
            const CdfCallable fn = [&sm](double u, double v) { return cdf(sm, u, v); };
            const Estimate ephi = phi_numeric(fn, cfg);
            const Estimate erho = rho_numeric(fn, cfg);
            ck.expect(ephi.error_bound == Rational(3, resolution),
                      "phi oracle bound not 3/n" + at);
            ck.expect(erho.error_bound == Rational(24, resolution),
                      "rho oracle bound not 24/n" + at);
            ck.expect(std::abs(ephi.value - phi.to_double()) <= ephi.error_bound.to_double(),
                      "phi estimate outside the documented bound" + at);
            ck.expect(std::abs(erho.value - rho.to_double()) <= erho.error_bound.to_double(),
                      "rho estimate outside the documented bound" + at);
            ++checked;
        }
    }
    return ck.result(std::to_string(checked) + " random shuffles, n=" + std::to_string(n_min) +
                     ".." + std::to_string(n_max) + ", resolution " + std::to_string(resolution));
}

CheckResult check_rearrangement_exhaustive(int n_max) {
    Checker ck("rearrangement-exhaustive");
    long total = 0;
    for (int n = 1; n <= n_max; ++n) {
        for_each_involution(n, [&](const Involution& p) {
            ++total;
            if (!ck.clean()) return;
            const std::string at = " at n=" + std::to_string(n) + " pi=" + perm_str(p);
            const Involution hat = canonical_rearrangement(p);
            ck.expect(shuffle_phi(hat) == shuffle_phi(p), "phi not preserved" + at);
            ck.expect(shuffle_rho(hat) <= shuffle_rho(p), "rho increased" + at);
            ck.expect(displacement_vector(hat).total == displacement_vector(p).total,
                      "total displacement changed" + at);
            const RearrangeClass cls = rearrangement_class(hat);
            ck.expect(cls != RearrangeClass::none || hat.is_identity(),
                      "output escapes the canonical classes" + at);
            // Slack sign must equal the lower-bound verdict, input and output.
            for (const Involution* q : {&p, &hat}) {
                const LowerSlack m = lower_bound_slack(*q);
                ck.expect(m.sign >= 0, "negative slack" + at);
                const BoundCheck low =
                    check_lower(make_region_point(shuffle_phi(*q), shuffle_rho(*q)));
                const int verdict_sign = low == BoundCheck::strict     ? 1
                                         : low == BoundCheck::equality ? 0
                                                                       : -1;
                ck.expect(m.sign == verdict_sign, "slack sign and bound verdict split" + at);
            }
        });
    }
    return ck.result(std::to_string(total) + " involutions rearranged, n=1.." +
                     std::to_string(n_max));
}

CheckResult check_rearrangement_anchors() {
    Checker ck("rearrangement-anchors");

    // 8 strips: displacement 14 lands in the nested class with one free swap.
    const Involution in8 = Involution::validated(8, {4, 7, 8, 1, 6, 5, 2, 3});
    const Involution out8 = canonical_rearrangement(in8);
    ck.expect(out8 == Permutation::validated(8, {8, 7, 3, 6, 5, 4, 2, 1}),
              "8-strip output is " + perm_str(out8));
    ck.expect(shuffle_phi(in8) == Rational(-5, 16), "8-strip phi wrong");
    ck.expect(shuffle_phi(out8) == Rational(-5, 16), "8-strip phi not preserved");
    ck.expect(shuffle_rho(in8) == Rational(-13, 32), "8-strip input rho wrong");
    ck.expect(shuffle_rho(out8) == Rational(-53, 64), "8-strip output rho wrong");
    const DisplacementVector pv8 = displacement_vector(in8);
    ck.expect(pv8.k == 4 && pv8.total == 14, "8-strip displacement vector wrong");
    ck.expect(pv8.entries ==
                  std::vector<Rational>({Rational(1, 8), Rational(3, 8), Rational(5, 8), Rational(5, 8)}),
              "8-strip p-vector wrong");
    const DisplacementVector pv8hat = displacement_vector(out8);
    ck.expect(pv8hat.entries ==
                  std::vector<Rational>({Rational(1, 4), Rational(5, 8), Rational(7, 8)}),
              "8-strip rearranged p-vector wrong");
    const LowerSlack m8 = lower_bound_slack(in8);
    ck.expect(m8.sign == 1, "8-strip slack sign wrong");
    ck.expect(m8.linear_term == Rational(19, 64) && m8.power_arg == Rational(1, 8),
              "8-strip slack terms wrong");
    ck.expect(std::abs(m8.value - 0.2526808261758407) < 1e-12, "8-strip slack value wrong");
    ck.expect(rearrangement_class(out8) == RearrangeClass::nested_block &&
                  to_string(rearrangement_class(out8)) == "nested-block",
              "8-strip class wrong");
    ck.expect(rearrangement_class(in8) == RearrangeClass::none, "8-strip input misclassified");

    // Its step functions: f = (k/n) p on k cells, one zero-sum block in g.
    const auto steps8 = rearrangement_steps(in8);
    ck.expect(steps8.first.values() == std::vector<Rational>({Rational(1, 16), Rational(3, 16),
                                                              Rational(5, 16), Rational(5, 16)}),
              "8-strip f wrong");
    ck.expect(steps8.second.values() == std::vector<Rational>({Rational(1, 16), Rational(1, 16),
                                                               Rational(0), Rational(-1, 8)}),
              "8-strip g wrong");
    const RearrangementReport rep8 = rearrangement_check(steps8.first, steps8.second);
    ck.expect(rep8.inequality_holds && rep8.inner_nonpositive && rep8.decomposable,
              "8-strip rearrangement report flags wrong");
    ck.expect(rep8.blocks.size() == 1 && rep8.blocks[0].sum.sign() == 0,
              "8-strip block structure wrong");

    // 16 strips: displacement 50, four nested swaps plus the free one.
    const Involution in16 =
        Involution::validated(16, {15, 16, 3, 14, 11, 12, 7, 8, 9, 10, 5, 6, 13, 4, 1, 2});
    const Involution out16 = canonical_rearrangement(in16);
    ck.expect(out16 == Permutation::validated(
                           16, {16, 15, 14, 13, 5, 6, 7, 8, 9, 12, 11, 10, 4, 3, 2, 1}),
              "16-strip output is " + perm_str(out16));
    ck.expect(shuffle_phi(in16) == Rational(-11, 64) && shuffle_phi(out16) == Rational(-11, 64),
              "16-strip phi wrong");
    const DisplacementVector pv16 = displacement_vector(in16);
    ck.expect(pv16.total == 50 && pv16.entries == std::vector<Rational>({Rational(3, 8), Rational(3, 8),
                                                                         Rational(5, 8), Rational(7, 8),
                                                                         Rational(7, 8)}),
              "16-strip p-vector wrong");
    ck.expect(displacement_vector(out16).entries ==
                  std::vector<Rational>({Rational(1, 8), Rational(9, 16), Rational(11, 16),
                                         Rational(13, 16), Rational(15, 16)}),
              "16-strip rearranged p-vector wrong");
    const auto steps16 = rearrangement_steps(in16);
    const StepFunction g16 = steps16.second;
    ck.expect(g16.values() == std::vector<Rational>({Rational(5, 64), Rational(-15, 256),
                                                     Rational(-5, 256), Rational(5, 256),
                                                     Rational(-5, 256)}),
              "16-strip g wrong");
    const RearrangementReport rep16 = rearrangement_check(steps16.first, g16);
    ck.expect(rep16.inequality_holds && rep16.inner_nonpositive && rep16.decomposable,
              "16-strip rearrangement report flags wrong");
    ck.expect(rep16.blocks.size() == 2 && rep16.blocks[0].last == 2 && rep16.blocks[1].first == 3,
              "16-strip block structure wrong");

    // Small cases: adjacent swaps collapse to one terminal swap; identity fixed.
    const Involution star6 = adjacent_swap_involution(6);
    const Involution star6hat = canonical_rearrangement(star6);
    ck.expect(star6hat == Permutation::validated(6, {1, 2, 6, 4, 5, 3}),
              "6-strip star output is " + perm_str(star6hat));
    ck.expect(rearrangement_class(star6hat) == RearrangeClass::terminal_swap,
              "6-strip star class wrong");
    ck.expect(shuffle_phi(star6hat) == Rational(1, 2) && shuffle_rho(star6hat) == Rational(1, 2),
              "6-strip star stats wrong");
    const Involution id4 = Involution::validated(4, {1, 2, 3, 4});
    ck.expect(canonical_rearrangement(id4).is_identity(), "identity not fixed");
    ck.expect(rearrangement_class(id4) == RearrangeClass::none, "identity class wrong");

    return ck.result("8- and 16-strip instances, star collapse, identity");
}

CheckResult check_rearrangement_steps(int n_max) {
    Checker ck("rearrangement-steps");
    long total = 0;
    for (int n = 2; n <= n_max; ++n) {
        for_each_involution(n, [&](const Involution& p) {
            if (!ck.clean()) return;
            const DisplacementVector pv = displacement_vector(p);
            if (pv.total == 0) return;
            ++total;
            const std::string at = " at n=" + std::to_string(n) + " pi=" + perm_str(p);
            const auto steps = rearrangement_steps(p);
            const StepFunction& f = steps.first;
            const StepFunction& g = steps.second;
            const RearrangementReport rep = rearrangement_check(f, g);
            ck.expect(rep.inequality_holds, "norm inequality fails" + at);
            ck.expect(rep.inner_nonpositive, "<f,g> positive" + at);
            ck.expect(rep.decomposable, "g not greedily block-decomposable" + at);
            for (const Block& b : rep.blocks) {
                ck.expect(b.sum.sign() == 0, "block sum non-zero" + at);
                ck.expect(b.inner_with_f.sign() <= 0, "block inner product positive" + at);
            }
            ck.expect(rep.diff_norm_sq - rep.f_norm_sq - rep.g_norm_sq ==
                          Rational(-2) * rep.inner_fg,
                      "polarization identity fails" + at);
            // Norms report the shuffle statistics: ||f||^2 = (k/n)(1-rho)/12,
            // ||f-g||^2 the same for the rearranged involution.
            const Rational kn(pv.k, n);
            const Involution hat = canonical_rearrangement(p);
            ck.expect(rep.f_norm_sq == kn * (Rational(1) - shuffle_rho(p)) / Rational(12),
                      "||f||^2 does not encode rho" + at);
            ck.expect(rep.diff_norm_sq == kn * (Rational(1) - shuffle_rho(hat)) / Rational(12),
                      "||f-g||^2 does not encode the rearranged rho" + at);
        });
    }
    return ck.result(std::to_string(total) + " step-function pairs, n=2.." + std::to_string(n_max));
}

CheckResult check_rearrangement_random(int pairs, std::uint64_t seed) {
    Checker ck("rearrangement-random");
    std::mt19937_64 rng(seed);
    auto rnd = [&rng](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    for (int it = 0; it < pairs && ck.clean(); ++it) {
        const int m = rnd(1, 12);
        const long fden = rnd(1, 48);
        std::vector<Rational> fv;
        long acc = rnd(0, 4);
        for (int i = 0; i < m; ++i) {
            acc += rnd(0, 5);
            fv.emplace_back(acc, fden);
        }
        const long gden = rnd(1, 48);
        std::vector<Rational> gv;
        int pos = 0;
        while (pos < m) {
            const int len = rnd(1, m - pos);
            const int head = rnd(1, len);
            const int tail = len - head;
            std::vector<long> vals(static_cast<std::size_t>(len), 0);
            if (tail > 0) {
                long mass = 0;
                for (int i = 0; i < head; ++i) {
                    vals[static_cast<std::size_t>(i)] = rnd(0, 6);
                    mass += vals[static_cast<std::size_t>(i)];
                }
                long rest = mass;
                for (int i = head; i < len - 1; ++i) {
                    const long take = rnd(0, static_cast<int>(std::min<long>(rest, 6)));
                    vals[static_cast<std::size_t>(i)] = -take;
                    rest -= take;
                }
                vals[static_cast<std::size_t>(len - 1)] = -rest;
            }
            for (long v : vals) gv.emplace_back(v, gden);
            pos += len;
        }
        const StepFunction f{fv};
        const StepFunction g{gv};
        const RearrangementReport rep = rearrangement_check(f, g);
        const std::string at = " at iteration " + std::to_string(it);
        ck.expect(rep.inequality_holds, "norm inequality fails" + at);
        ck.expect(rep.inner_nonpositive, "<f,g> positive" + at);
        ck.expect(rep.decomposable, "constructed blocks lost their zero sums" + at);
        ck.expect(rep.inner_fg == inner(f, g), "reported inner product wrong" + at);
        ck.expect(rep.diff_norm_sq - rep.f_norm_sq - rep.g_norm_sq == Rational(-2) * rep.inner_fg,
                  "polarization identity fails" + at);
        int cursor = 0;
        for (const Block& b : rep.blocks) {
            ck.expect(b.first == cursor, "blocks not contiguous" + at);
            ck.expect(b.sum.sign() == 0, "block sum non-zero" + at);
            ck.expect(b.inner_with_f.sign() <= 0, "block inner product positive" + at);
            cursor = b.last + 1;
        }
        ck.expect(cursor == m, "blocks do not cover the cells" + at);
    }
    return ck.result(std::to_string(pairs) + " random (f, g) pairs");
}

CheckResult check_roundtrip_exhaustive(int n_max) {
    Checker ck("roundtrip-exhaustive");
    long pattern_total = 0;
    for (int n = 2; n <= n_max; n += 2) {
        const std::vector<std::string> patterns = all_patterns(n);
        ck.expect(static_cast<long>(patterns.size()) == catalan(n / 2),
                  "pattern count at n=" + std::to_string(n) + " is " +
                      std::to_string(patterns.size()) + ", expected " +
                      std::to_string(catalan(n / 2)));
        for (const std::string& pat : patterns) {
            if (!ck.clean()) break;
            ++pattern_total;
            const std::string at = " at n=" + std::to_string(n) + " pattern " + pat;
            const ZeroTwoDiagonal d02 = ZeroTwoDiagonal::from_pattern(n, pat);
            const Diagonal delta = d02.as_diagonal();
            const Involution pi = diagonal_to_shuffle(d02);
            ck.expect(shuffle_to_diagonal(pi).pattern() == pat, "round trip breaks" + at);
            const SegmentMap sm = shuffle_support(pi);
            for (int i = 0; i <= n && ck.clean(); ++i) {
                for (int j = 0; j <= n; ++j) {
                    const Rational u(i, n);
                    const Rational v(j, n);
                    const Rational lhs = diagonal_cdf(delta, u, v);
                    ck.expect(lhs == cdf(sm, u, v), "diagonal and shuffle CDFs split" + at);
                    ck.expect(lhs == disintegration_cdf(delta, u, v),
                              "disintegration CDF disagrees" + at);
                }
            }
            ck.expect(shuffle_phi(pi) == Rational(6) * pl_integral(delta) - Rational(2),
                      "phi does not match the diagonal integral" + at);
        }
    }
    // Reverse direction over raw involutions: the convertible ones are
    // exactly counted by the pattern classes and convert back identically.
    for (int n = 2; n <= n_max; n += 2) {
        long convertible = 0;
        for_each_involution(n, [&](const Involution& p) {
            if (!ck.clean()) return;
            try {
                const ZeroTwoDiagonal d = shuffle_to_diagonal(p);
                ++convertible;
                ck.expect(diagonal_to_shuffle(d) == p,
                          "reverse round trip breaks at n=" + std::to_string(n) + " pi=" +
                              perm_str(p));
            } catch (const std::invalid_argument&) {
                // fixed points or a non-monotone pairing: not in the class
            }
        });
        ck.expect(convertible == catalan(n / 2),
                  "convertible involution count at n=" + std::to_string(n) + " is " +
                      std::to_string(convertible));
    }
    return ck.result(std::to_string(pattern_total) + " patterns, CDF grids and both round trips");
}

CheckResult check_roundtrip_anchor() {
    Checker ck("roundtrip-anchor");
    const std::string pat = "002022020022";
    const ZeroTwoDiagonal d02 = ZeroTwoDiagonal::from_pattern(12, pat);
    const Involution pi = diagonal_to_shuffle(d02);
    const Involution expected =
        Involution::validated(12, {3, 5, 1, 6, 2, 4, 8, 7, 11, 12, 9, 10});
    ck.expect(pi == expected, "12-cell pairing is " + perm_str(pi));
    const IndexClasses cls = classify(pi);
    ck.expect(cls.minus == std::vector<int>({3, 5, 6, 8, 11, 12}), "12-cell left set wrong");
    ck.expect(shuffle_to_diagonal(expected).pattern() == pat, "12-cell reverse trip wrong");
    const Diagonal delta = d02.as_diagonal();
    const SegmentMap sm = shuffle_support(pi);
    for (int i = 0; i <= 12; ++i)
        for (int j = 0; j <= 12; ++j) {
            const Rational u(i, 12);
            const Rational v(j, 12);
            ck.expect(diagonal_cdf(delta, u, v) == cdf(sm, u, v),
                      "12-cell CDFs split at (" + std::to_string(i) + "/12," + std::to_string(j) +
                          "/12)");
        }
    return ck.result("12-cell pattern reproduces its pairing and CDF grid");
}

CheckResult check_pairing_maximality(int n_max) {
    Checker ck("pairing-maximality");
    long pairings_total = 0;
    for (int n = 2; n <= n_max; n += 2) {
        for (const std::string& pat : all_patterns(n)) {
            if (!ck.clean()) break;
            const ZeroTwoDiagonal d02 = ZeroTwoDiagonal::from_pattern(n, pat);
            const Diagonal delta = d02.as_diagonal();
            const Involution rank = diagonal_to_shuffle(d02);
            const Rational rho_rank = shuffle_rho(rank);
            const Rational phi_rank = shuffle_phi(rank);
            std::vector<int> left;
            std::vector<int> right;
            for (int i = 0; i < d02.cells(); ++i)
                (d02.slopes()[static_cast<std::size_t>(i)] == 2 ? left : right).push_back(i + 1);
            std::vector<int> partner(left.size(), 0);
            std::vector<bool> used(right.size(), false);
            const std::string at = " at n=" + std::to_string(n) + " pattern " + pat;
            for_each_pairing(left, right, 0, partner, used, [&](const std::vector<int>& match) {
                if (!ck.clean()) return;
                ++pairings_total;
                std::vector<int> image(static_cast<std::size_t>(n));
                std::iota(image.begin(), image.end(), 1);
                for (std::size_t j = 0; j < left.size(); ++j) {
                    image[static_cast<std::size_t>(left[j] - 1)] = match[j];
                    image[static_cast<std::size_t>(match[j] - 1)] = left[j];
                }
                const Involution q = Involution::validated(n, image);
                ck.expect(shuffle_phi(q) == phi_rank, "phi depends on the pairing" + at);
                const bool is_rank = match == right;
                if (is_rank) {
                    ck.expect(shuffle_rho(q) == rho_rank, "rank pairing rho mismatch" + at);
                } else {
                    ck.expect(shuffle_rho(q) < rho_rank, "non-rank pairing not dominated" + at);
                }
                const SegmentMap sm = shuffle_support(q);
                for (int i = 0; i <= n; ++i) {
                    const Rational t(i, n);
                    ck.expect(cdf(sm, t, t) == delta(t), "pairing changes the diagonal" + at);
                }
                for (int i = 0; i <= n && ck.clean(); ++i)
                    for (int j = 0; j <= n; ++j) {
                        const Rational u(i, n);
                        const Rational v(j, n);
                        ck.expect(cdf(sm, u, v) <= diagonal_cdf(delta, u, v),
                                  "diagonal copula not maximal" + at);
                    }
            });
        }
    }
    return ck.result(std::to_string(pairings_total) +
                     " pairings dominated by their rank pairing");
}

CheckResult check_kernel_identities() {
    Checker ck("kernel-identities");

    const Diagonal rising13 = rising_diagonal(Rational(1, 3)).diagonal;
    const Diagonal plateau18 = plateau_diagonal(Rational(1, 8)).diagonal;
    const Diagonal quarter = ZeroTwoDiagonal::from_pattern(4, "0202").as_diagonal();
    const Diagonal twelve = ZeroTwoDiagonal::from_pattern(12, "002022020022").as_diagonal();

    for (const Diagonal* d : {&rising13, &plateau18, &quarter, &twelve}) {
        for (int i = 0; i <= 64 && ck.clean(); ++i)
            for (int j = 0; j <= 64; ++j) {
                const Rational u(i, 64);
                const Rational v(j, 64);
                ck.expect(disintegration_cdf(*d, u, v) == diagonal_cdf(*d, u, v),
                          "disintegration CDF disagrees at (" + std::to_string(i) + "/64," +
                              std::to_string(j) + "/64)");
            }
        // Fibre shape and monotone support maps off the breakpoints.
        Rational prev_lower(-1);
        Rational prev_upper(-1);
        for (int j = 1; j < 64; ++j) {
            const Rational t(j, 64);
            const auto& xs = d->breakpoints();
            if (std::find(xs.begin(), xs.end(), t) != xs.end()) continue;
            const KernelAtom atom = diagonal_kernel(*d, t);
            ck.expect(atom.t == t, "kernel atom misplaced");
            ck.expect(atom.lower <= t && t <= atom.upper, "fibre does not bracket t");
            ck.expect(atom.weight_lower >= Rational(0) && atom.weight_lower <= Rational(1),
                      "kernel weight out of range");
            ck.expect(atom.lower >= prev_lower && atom.upper >= prev_upper,
                      "support maps not monotone");
            prev_lower = atom.lower;
            prev_upper = atom.upper;
        }
    }

    // Worked fibres of the rising diagonal at a = 1/3.
    const KernelAtom r_half = diagonal_kernel(rising13, Rational(1, 2));
    ck.expect(r_half.lower == Rational(1, 12) && r_half.upper == Rational(11, 12) &&
                  r_half.weight_lower == Rational(1, 2),
              "rising fibre at 1/2 wrong");
    const KernelAtom r_sixth = diagonal_kernel(rising13, Rational(1, 6));
    ck.expect(r_sixth.lower == Rational(0) && r_sixth.upper == Rational(2, 3) &&
                  r_sixth.weight_lower.sign() == 0,
              "rising fibre at 1/6 wrong");

    // Worked fibres of the plateau diagonal at b = 1/8.
    const KernelAtom p_mid = diagonal_kernel(plateau18, Rational(1, 2));
    ck.expect(p_mid.lower == Rational(3, 16) && p_mid.upper == Rational(13, 16) &&
                  p_mid.weight_lower == Rational(1, 2),
              "plateau fibre at 1/2 wrong");
    const KernelAtom p_low = diagonal_kernel(plateau18, Rational(3, 16));
    ck.expect(p_low.upper == Rational(1, 2) && p_low.weight_lower.sign() == 0,
              "plateau fibre at 3/16 wrong");

    return ck.result("disintegration grids and worked fibres for four diagonals");
}

CheckResult check_approximation() {
    Checker ck("slope-approximation");
    const Diagonal delta_m = Diagonal::validated({Rational(0), Rational(1)}, {Rational(0), Rational(1)});
    const Diagonal delta_w = Diagonal::validated({Rational(0), Rational(1, 2), Rational(1)},
                                                 {Rational(0), Rational(0), Rational(1)});
    const auto square = [](const Rational& t) { return t * t; };

    for (const int N : {2, 4, 8, 16, 32, 64}) {
        const std::string at = " at N=" + std::to_string(N);
        for (const Diagonal* d : {&delta_m, &delta_w}) {
            const ZeroTwoDiagonal d02 = zero_two_approximation(*d, N);
            ck.expect(d02.cells() == 2 * N, "cell count wrong" + at);
            const Diagonal approx = d02.as_diagonal();
            ck.expect(pointwise_leq(approx, *d), "minorant exceeds the diagonal" + at);
            ck.expect(sup_distance(*d, approx) <= Rational(1, N), "sup distance above 1/N" + at);
        }
        const ZeroTwoDiagonal sq02 = zero_two_approximation(square, N);
        const Diagonal approx = sq02.as_diagonal();
        // For t^2 the per-cell extremes of the difference sit on cell
        // endpoints (the difference is monotone on every cell), so the grid
        // checks below are exact, not sampled.
        Rational worst(0);
        for (int i = 0; i <= 2 * N; ++i) {
            const Rational x(i, 2 * N);
            const Rational diff = square(x) - approx(x);
            ck.expect(diff.sign() >= 0, "t^2 minorant exceeds t^2" + at);
            worst = std::max(worst, diff);
        }
        ck.expect(worst <= Rational(1, N), "t^2 sup distance above 1/N" + at);
    }

    ck.expect(zero_two_approximation(delta_m, 2).pattern() == "0202", "comonotone pattern wrong");
    ck.expect(zero_two_approximation(delta_w, 2).pattern() == "0022",
              "countermonotone pattern wrong");
    return ck.result("minorants for both extreme diagonals and t^2, N up to 64");
}

CheckResult check_end_reflection(int grid) {
    Checker ck("end-reflection");
    for (int j = 0; j <= grid - 1; ++j) {
        const Rational alpha(j, 2 * (grid - 1));  // [0, 1/2]
        const EndReflection fam = end_reflection(alpha);
        const std::string at = " at alpha=" + alpha.str();
        ck.expect(fam.stats.phi == Rational(6) * alpha * alpha - Rational(6) * alpha + Rational(1),
                  "phi closed form wrong" + at);
        ck.expect(fam.stats.rho == Rational(-16) * alpha * alpha * alpha +
                                       Rational(24) * alpha * alpha - Rational(12) * alpha +
                                       Rational(1),
                  "rho closed form wrong" + at);
        // Independent route: exact integration over the support map.
        ck.expect(phi_exact(fam.support) == fam.stats.phi, "phi integration disagrees" + at);
        ck.expect(rho_exact(fam.support) == fam.stats.rho, "rho integration disagrees" + at);
        const RegionPoint pt = make_region_point(fam.stats.phi, fam.stats.rho);
        ck.expect(check_lower(pt) == BoundCheck::equality, "lower bound not attained" + at);
        ck.expect(check_upper(pt) != BoundCheck::violated, "upper bound violated" + at);
        ck.expect(lower_bound(fam.stats.phi).compare(fam.stats.rho) == std::strong_ordering::equal,
                  "lower curve misses the point" + at);
    }
    const EndReflection half = end_reflection(Rational(1, 2));
    ck.expect(half.stats.phi == Rational(-1, 2) && half.stats.rho == Rational(-1),
              "alpha=1/2 should hit (-1/2,-1)");
    const EndReflection zero = end_reflection(Rational(0));
    ck.expect(zero.stats.phi == Rational(1) && zero.stats.rho == Rational(1),
              "alpha=0 should hit (1,1)");
    return ck.result(std::to_string(grid) + " parameters on the lower bound, integration matches");
}

CheckResult check_rising(int grid) {
    Checker ck("rising-family");
    for (int j = 0; j <= grid - 1; ++j) {
        const Rational a = Rational(1, 4) + Rational(j, 4 * (grid - 1));  // [1/4, 1/2]
        const RisingDiagonal fam = rising_diagonal(a);
        const std::string at = " at a=" + a.str();
        ck.expect(fam.stats.phi == Rational(6) * a * a - Rational(6) * a + Rational(1),
                  "phi closed form wrong" + at);
        ck.expect(fam.stats.rho ==
                      Rational(8) * a * a * a - Rational(6) * a + Rational(3, 2),
                  "rho closed form wrong" + at);
        ck.expect(Rational(6) * pl_integral(fam.diagonal) - Rational(2) == fam.stats.phi,
                  "phi integration disagrees" + at);
        const std::vector<WeightedBranch> branches = rising_branches(a);
        ck.expect(weighted_rho(branches) == fam.stats.rho, "rho integration disagrees" + at);
        for (int k = 0; k <= 8; ++k) {
            const Rational v(k, 8);
            ck.expect(weighted_margin(branches, v) == v, "margins not uniform" + at);
        }
        // The family parameterizes the power branch shared by both envelopes.
        ck.expect(reference_envelope(fam.stats.phi).compare(fam.stats.rho) ==
                      std::strong_ordering::equal,
                  "reference envelope misses the family" + at);
        ck.expect(refined_envelope(fam.stats.phi).compare(fam.stats.rho) ==
                      std::strong_ordering::equal,
                  "refined envelope misses the family" + at);
        const RegionPoint pt = make_region_point(fam.stats.phi, fam.stats.rho);
        ck.expect(check_upper(pt) != BoundCheck::violated &&
                      check_lower(pt) != BoundCheck::violated,
                  "bounds violated" + at);
    }
    // Fibres agree with the branch table inside the slope-1 stretch.
    const Rational a(1, 3);
    const KernelAtom atom = diagonal_kernel(rising_diagonal(a).diagonal, Rational(1, 2));
    ck.expect(atom.lower == (Rational(1, 2) - a) / Rational(2) &&
                  atom.upper == (Rational(1, 2) + a + Rational(1)) / Rational(2),
              "kernel disagrees with the branch table");
    return ck.result(std::to_string(grid) + " parameters, envelope contact and margins");
}

CheckResult check_plateau(int grid) {
    Checker ck("plateau-family");
    for (int j = 0; j <= grid - 1; ++j) {
        const Rational b(j, 4 * (grid - 1));  // [0, 1/4]
        const PlateauDiagonal fam = plateau_diagonal(b);
        const std::string at = " at b=" + b.str();
        ck.expect(fam.stats.phi ==
                      Rational(-6) * b * b + Rational(3) * b - Rational(1, 8),
                  "phi closed form wrong" + at);
        ck.expect(fam.stats.rho == Rational(8) * b * b * b - Rational(12) * b * b +
                                       Rational(9, 2) * b + Rational(1, 8),
                  "rho closed form wrong" + at);
        ck.expect(Rational(6) * pl_integral(fam.diagonal) - Rational(2) == fam.stats.phi,
                  "phi integration disagrees" + at);
        ck.expect(weighted_rho(fam.support) == fam.stats.rho, "rho integration disagrees" + at);
        for (int k = 0; k <= 8; ++k) {
            const Rational v(k, 8);
            ck.expect(weighted_margin(fam.support, v) == v, "margins not uniform" + at);
        }
        // The family parameterizes the refined envelope's middle branch.
        ck.expect(refined_envelope(fam.stats.phi).compare(fam.stats.rho) ==
                      std::strong_ordering::equal,
                  "refined envelope misses the family" + at);
        if (b.sign() > 0 && b < Rational(1, 4)) {
            ck.expect(reference_envelope(fam.stats.phi).compare(fam.stats.rho) ==
                          std::strong_ordering::less,
                      "family should sit strictly above the reference envelope" + at);
        }
    }
    const PlateauDiagonal eighth = plateau_diagonal(Rational(1, 8));
    ck.expect(eighth.stats.phi == Rational(5, 32) && eighth.stats.rho == Rational(33, 64),
              "b=1/8 should hit (5/32, 33/64)");
    return ck.result(std::to_string(grid) + " parameters on the refined envelope");
}

CheckResult check_family_chain() {
    Checker ck("family-chain");
    const Involution star2 = adjacent_swap_involution(2);
    const Involution star4 = adjacent_swap_involution(4);

    const RisingDiagonal rise_half = rising_diagonal(Rational(1, 2));
    ck.expect(rise_half.stats.phi == shuffle_phi(star2) && rise_half.stats.rho == shuffle_rho(star2),
              "rising(1/2) misses the 2-strip star stats");
    ck.expect(rise_half.stats.phi == Rational(-1, 2) && rise_half.stats.rho == Rational(-1, 2),
              "rising(1/2) stats wrong");
    ck.expect(same_diagonal(rise_half.diagonal, shuffle_to_diagonal(star2).as_diagonal()),
              "rising(1/2) diagonal differs from the 2-strip star");

    const RisingDiagonal rise_quarter = rising_diagonal(Rational(1, 4));
    const PlateauDiagonal plat_zero = plateau_diagonal(Rational(0));
    ck.expect(rise_quarter.stats.phi == plat_zero.stats.phi &&
                  rise_quarter.stats.rho == plat_zero.stats.rho,
              "rising(1/4) and plateau(0) stats differ");
    ck.expect(rise_quarter.stats.phi == Rational(-1, 8) && rise_quarter.stats.rho == Rational(1, 8),
              "chain midpoint stats wrong");
    ck.expect(same_diagonal(rise_quarter.diagonal, plat_zero.diagonal),
              "rising(1/4) and plateau(0) diagonals differ");

    const PlateauDiagonal plat_quarter = plateau_diagonal(Rational(1, 4));
    ck.expect(plat_quarter.stats.phi == shuffle_phi(star4) &&
                  plat_quarter.stats.rho == shuffle_rho(star4),
              "plateau(1/4) misses the 4-strip star stats");
    ck.expect(plat_quarter.stats.phi == Rational(1, 4) && plat_quarter.stats.rho == Rational(5, 8),
              "plateau(1/4) stats wrong");
    ck.expect(same_diagonal(plat_quarter.diagonal, shuffle_to_diagonal(star4).as_diagonal()),
              "plateau(1/4) diagonal differs from the 4-strip star");

    const RisingDiagonal rise_third = rising_diagonal(Rational(1, 3));
    ck.expect(rise_third.stats.phi == Rational(-1, 3) && rise_third.stats.rho == Rational(-11, 54),
              "rising(1/3) stats wrong");

    // Ordinal sums against direct integration of the support maps.
    const FamilyPoint w_block = ordinal_sum_stats(
        {OrdinalBlock{Rational(0), Rational(1, 2), FamilyPoint{Rational(-1, 2), Rational(-1)}}});
    const SegmentMap w_then_m = SegmentMap::validated(
        {Piece{Rational(0), Rational(1, 2), -1, Rational(1, 2)},
         Piece{Rational(1, 2), Rational(1), +1, Rational(0)}});
    ck.expect(w_block.phi == phi_exact(w_then_m) && w_block.rho == rho_exact(w_then_m),
              "half W block disagrees with direct integration");
    ck.expect(w_block.phi == Rational(5, 8) && w_block.rho == Rational(3, 4),
              "half W block stats wrong");

    const FamilyPoint w_pair = ordinal_sum_stats(
        {OrdinalBlock{Rational(0), Rational(1, 2), FamilyPoint{Rational(-1, 2), Rational(-1)}},
         OrdinalBlock{Rational(1, 2), Rational(1), FamilyPoint{Rational(-1, 2), Rational(-1)}}});
    const SegmentMap w_twice = SegmentMap::validated(
        {Piece{Rational(0), Rational(1, 2), -1, Rational(1, 2)},
         Piece{Rational(1, 2), Rational(1), -1, Rational(3, 2)}});
    ck.expect(w_pair.phi == phi_exact(w_twice) && w_pair.rho == rho_exact(w_twice),
              "paired W blocks disagree with direct integration");
    ck.expect(w_pair.phi == Rational(1, 4) && w_pair.rho == Rational(1, 2),
              "paired W blocks stats wrong");

    return ck.result("chain endpoints, the worked point, ordinal sums vs direct integration");
}

CheckResult check_ordinal_gaps(int n_max) {
    Checker ck("ordinal-gaps");
    for (int N = 2; N <= n_max; ++N) {
        const OrdinalInterpolation fam = ordinal_interpolation(N);
        const std::string at = " at N=" + std::to_string(N);
        const long n = N;
        const Rational phi_expected(2 * n * n + n - 4, 2 * (n + 1) * (n + 1));
        const long num = ((((2 * n + 6) * n + 3) * n - 7) * n - 3) * n + 1;
        const long den = 2 * n * n * (n + 1) * (n + 1) * (n + 1);
        ck.expect(fam.stats.phi == phi_expected, "phi polynomial wrong" + at);
        ck.expect(fam.stats.rho == Rational(num, den), "rho polynomial wrong" + at);
        ck.expect(fam.gap_above_reference == Rational(1, den), "gap not 1/(2N^2(N+1)^3)" + at);
        ck.expect(static_cast<int>(fam.blocks.size()) == N, "block count wrong" + at);
        const FamilyPoint component = rising_diagonal(Rational(n, 2 * n + 2)).stats;
        for (const OrdinalBlock& blk : fam.blocks)
            ck.expect(blk.stats.phi == component.phi && blk.stats.rho == component.rho,
                      "block stats wrong" + at);
        // The refined envelope interpolates these points exactly.
        const EnvelopeValue s = refined_envelope(fam.stats.phi);
        ck.expect(s.exact() && s.exact_value() == fam.stats.rho,
                  "refined envelope misses the point" + at);
        const EnvelopeValue r = reference_envelope(fam.stats.phi);
        ck.expect(r.exact() && r.exact_value() == fam.stats.rho - fam.gap_above_reference,
                  "reference envelope gap wrong" + at);
        // The point sits inside the knot interval it interpolates.
        ck.expect(fam.stats.phi > Rational(1) - Rational(3, 2 * n) &&
                      fam.stats.phi < Rational(1) - Rational(3, 2 * (n + 1)),
                  "phi escapes its knot interval" + at);
    }
    const OrdinalInterpolation two = ordinal_interpolation(2);
    ck.expect(two.stats.phi == Rational(1, 3) && two.stats.rho == Rational(151, 216) &&
                  two.gap_above_reference == Rational(1, 216),
              "N=2 triple should be (1/3, 151/216, 1/216)");
    return ck.result("gaps exact for N=2.." + std::to_string(n_max));
}

CheckResult check_envelope_values() {
    Checker ck("envelope-values");

    ck.expect(upper_bound(Rational(-1, 2)) == Rational(-1, 2), "upper(-1/2) wrong");
    ck.expect(upper_bound(Rational(0)) == Rational(1, 3), "upper(0) wrong");
    ck.expect(upper_bound(Rational(1, 4)) == Rational(5, 8), "upper(1/4) wrong");
    ck.expect(upper_bound(Rational(1)) == Rational(1), "upper(1) wrong");

    const EnvelopeValue low_left = lower_bound(Rational(-1, 2));
    ck.expect(low_left.exact() && low_left.exact_value() == Rational(-1), "lower(-1/2) wrong");
    ck.expect(lower_bound(Rational(1)).compare(Rational(1)) == std::strong_ordering::equal,
              "lower(1) wrong");
    ck.expect(std::abs(lower_bound(Rational(1, 4)).to_double() - (std::sqrt(0.5) - 1.0)) < 1e-15,
              "lower(1/4) decimal wrong");

    const EnvelopeValue r_left = reference_envelope(Rational(-1, 2));
    ck.expect(r_left.exact() && r_left.exact_value() == Rational(-1, 2), "r(-1/2) wrong");
    const EnvelopeValue r_joint = reference_envelope(Rational(-1, 8));
    ck.expect(r_joint.exact() && r_joint.exact_value() == Rational(1, 8), "r(-1/8) wrong");
    // The power branch agrees there: 1/4 - (1/9) sqrt(3) (3/4)^{3/2} = 1/8.
    const EnvelopeValue r_power{Rational(1, 4), Rational(-1, 9), 3, Rational(3, 4)};
    ck.expect(r_power.compare(Rational(1, 8)) == std::strong_ordering::equal,
              "power branch discontinuous at -1/8");
    ck.expect(reference_envelope(Rational(1, 4)).exact_value() == Rational(5, 8), "r(1/4) wrong");
    ck.expect(reference_envelope(Rational(1, 3)).exact_value() == Rational(25, 36), "r(1/3) wrong");
    ck.expect(reference_envelope(Rational(1, 2)).exact_value() == Rational(5, 6), "r(1/2) wrong");
    ck.expect(reference_envelope(Rational(5, 8)).exact_value() == Rational(29, 32), "r(5/8) wrong");
    ck.expect(reference_envelope(Rational(1)).exact_value() == Rational(1), "r(1) wrong");

    const EnvelopeValue s_left = refined_envelope(Rational(-1, 2));
    ck.expect(s_left.exact() && s_left.exact_value() == Rational(-1, 2), "s(-1/2) wrong");
    ck.expect(refined_envelope(Rational(-1, 8)).compare(Rational(1, 8)) ==
                  std::strong_ordering::equal,
              "s(-1/8) wrong");
    const EnvelopeValue s_quarter = refined_envelope(Rational(1, 4));
    ck.expect(s_quarter.exact() && s_quarter.exact_value() == Rational(5, 8), "s(1/4) wrong");
    ck.expect(refined_envelope(Rational(1, 3)).exact_value() == Rational(151, 216), "s(1/3) wrong");
    ck.expect(refined_envelope(Rational(7, 16)).exact_value() == Rational(451, 576),
              "s(7/16) wrong");
    ck.expect(refined_envelope(Rational(1, 2)).exact_value() == Rational(5, 6), "s(1/2) wrong");
    ck.expect(refined_envelope(Rational(1)).exact_value() == Rational(1), "s(1) wrong");
    ck.expect(upper_bound(Rational(1, 3)) - refined_envelope(Rational(1, 3)).exact_value() ==
                  Rational(1, 216),
              "s(1/3) should sit 1/216 below the upper bound");

    // Knot contact for both envelopes, and the upper curve there.
    for (int m = 2; m <= 10; ++m) {
        const Rational knot = Rational(1) - Rational(3, 2 * m);
        const Rational touch = Rational(1) - Rational(3, 2 * static_cast<long>(m) * m);
        const std::string at = " at knot m=" + std::to_string(m);
        ck.expect(upper_bound(knot) == touch, "upper misses the knot" + at);
        const EnvelopeValue r = reference_envelope(knot);
        const EnvelopeValue s = refined_envelope(knot);
        ck.expect(r.exact() && r.exact_value() == touch, "reference misses the knot" + at);
        ck.expect(s.exact() && s.exact_value() == touch, "refined misses the knot" + at);
    }

    // Ordering on a dense rational grid: lower <= r <= s <= upper.
    for (int k = -128; k <= 256; ++k) {
        const Rational x(k, 256);
        const std::string at = " at x=" + x.str();
        const EnvelopeValue low = lower_bound(x);
        const EnvelopeValue r = reference_envelope(x);
        const EnvelopeValue s = refined_envelope(x);
        const Rational up = upper_bound(x);
        ck.expect(low.compare(r) != std::strong_ordering::greater, "lower above reference" + at);
        ck.expect(r.compare(s) != std::strong_ordering::greater, "reference above refined" + at);
        ck.expect(s.compare(up) != std::strong_ordering::greater, "refined above upper" + at);
        ck.expect(low.compare(up) != std::strong_ordering::greater, "lower above upper" + at);
    }

    // r == s on the shared power branch, sampled.
    for (int k = -127; k < -32; k += 7) {
        const Rational x(k, 256);
        ck.expect(reference_envelope(x).compare(refined_envelope(x)) == std::strong_ordering::equal,
                  "envelopes split below -1/8 at x=" + x.str());
    }
    return ck.result("pinned values, knot contact, dense ordering grid");
}

CheckResult check_envelope_order(int samples, std::uint64_t seed) {
    Checker ck("envelope-order");
    std::mt19937_64 rng(seed);
    // Denominator q prime: p/q can never equal a knot 1 - 3/(2m), whose
    // reduced denominator divides 2m, so every sample is knot-free.
    const long q = 1000003;
    std::uniform_int_distribution<long> dist(-q / 8 + 1, q - 1);
    int strict = 0;
    for (int i = 0; i < samples && ck.clean(); ++i) {
        const Rational x(dist(rng), q);
        const std::string at = " at x=" + x.str();
        const EnvelopeValue r = reference_envelope(x);
        const EnvelopeValue s = refined_envelope(x);
        ck.expect(r.exact(), "reference unexpectedly symbolic" + at);
        ck.expect(s.compare(r.exact_value()) == std::strong_ordering::greater,
                  "refined not strictly above reference" + at);
        ck.expect(s.compare(upper_bound(x)) == std::strong_ordering::less,
                  "refined not strictly below the upper bound" + at);
        ck.expect(lower_bound(x).compare(r) != std::strong_ordering::greater,
                  "lower bound above the reference envelope" + at);
        ++strict;
    }
    return ck.result(std::to_string(strict) + " knot-free samples in (-1/8, 1), all strict");
}

std::vector<std::string> suite_names() {
    return {"bounds", "rearrange", "roundtrip", "families", "boundary"};
}

std::vector<CheckResult> verify_suite(const std::string& suite, int n_max, std::uint64_t seed) {
    std::vector<CheckResult> out;
    if (suite == "bounds") {
        out.push_back(check_involution_bounds(2, n_max));
        out.push_back(check_upper_equality_set(2, n_max));
        out.push_back(check_adjacent_swap_touch(50));
        out.push_back(check_oracle_agreement(3, 4, std::min(n_max, 8), 500, seed));
    } else if (suite == "rearrange") {
        out.push_back(check_rearrangement_exhaustive(n_max));
        out.push_back(check_rearrangement_anchors());
        out.push_back(check_rearrangement_steps(n_max));
        out.push_back(check_rearrangement_random(2000, seed));
    } else if (suite == "roundtrip") {
        out.push_back(check_roundtrip_exhaustive(n_max));
        out.push_back(check_roundtrip_anchor());
        out.push_back(check_pairing_maximality(n_max));
        out.push_back(check_kernel_identities());
        out.push_back(check_approximation());
    } else if (suite == "families") {
        out.push_back(check_end_reflection(32));
        out.push_back(check_rising(17));
        out.push_back(check_plateau(17));
        out.push_back(check_family_chain());
        out.push_back(check_ordinal_gaps(20));
    } else if (suite == "boundary") {
        out.push_back(check_envelope_values());
        out.push_back(check_envelope_order(1000, seed));
    } else {
        throw std::invalid_argument("unknown suite \"" + suite +
                                    "\" (expected bounds, rearrange, roundtrip, families or boundary)");
    }
    return out;
}

}  // namespace phirho
