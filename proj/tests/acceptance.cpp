// Acceptance gate: ten suite-level criteria, one verdict line each.
// Exit code is the number of failed criteria.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "phirho/verify.hpp"

using phirho::CheckResult;

namespace {

constexpr std::uint64_t kSeed = 987654321;

struct Criterion {
    const char* description;
    std::function<std::vector<CheckResult>()> checks;
};

int run(const std::vector<Criterion>& criteria) {
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::vector<CheckResult> results;
        std::string error;
        try {
            results = criteria[i].checks();
        } catch (const std::exception& e) {
            error = e.what();
        }
        bool pass = error.empty();
        std::string detail = error;
        for (const CheckResult& r : results) {
            if (!r.pass && pass) {
                pass = false;
                detail = r.name + ": " + r.detail;
            }
        }
        std::printf("[%2zu/10] %s  %s%s%s\n", i + 1, pass ? "PASS" : "FAIL",
                    criteria[i].description, pass ? "" : " -- ", pass ? "" : detail.c_str());
        std::fflush(stdout);
        failures += pass ? 0 : 1;
    }
    std::printf("%zu/10 criteria passed\n", criteria.size() - failures);
    return failures;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"both region bounds hold exactly for every involution of orders 2..8",
         [] {
             return std::vector<CheckResult>{phirho::check_involution_bounds(2, 8)};
         }},
        {"upper-bound equality set equals the constant-displacement characterization",
         [] {
             return std::vector<CheckResult>{phirho::check_upper_equality_set(2, 8)};
         }},
        {"rearrangement preserves phi, weakly lowers rho, lands canonically, slack >= 0",
         [] {
             return std::vector<CheckResult>{phirho::check_rearrangement_exhaustive(8),
                                             phirho::check_rearrangement_anchors()};
         }},
        {"grid oracle within 3/n and 24/n of exact values, 50 shuffles per order 4..12",
         [] {
             return std::vector<CheckResult>{phirho::check_oracle_agreement(50, 4, 12, 2000, kSeed)};
         }},
        {"slope-pattern minorants stay below their targets within 1/N up to N = 64",
         [] {
             return std::vector<CheckResult>{phirho::check_approximation()};
         }},
        {"diagonal/shuffle round trips are identities with matching CDFs up to 8 cells",
         [] {
             return std::vector<CheckResult>{phirho::check_roundtrip_exhaustive(8),
                                             phirho::check_roundtrip_anchor()};
         }},
        {"family closed forms match independent integration; chain joints coincide",
         [] {
             return std::vector<CheckResult>{phirho::check_end_reflection(32),
                                             phirho::check_rising(17), phirho::check_plateau(17),
                                             phirho::check_family_chain()};
         }},
        {"ordinal interpolation sits above the reference curve by 1/(2N^2(N+1)^3) exactly",
         [] {
             return std::vector<CheckResult>{phirho::check_ordinal_gaps(20)};
         }},
        {"refined envelope strictly dominates the reference one off the knots, below the upper bound",
         [] {
             return std::vector<CheckResult>{phirho::check_envelope_values(),
                                             phirho::check_envelope_order(1000, kSeed)};
         }},
        {"step-function rearrangement inequality over 10^4 random pairs plus worked instances",
         [] {
             return std::vector<CheckResult>{phirho::check_rearrangement_random(10000, kSeed),
                                             phirho::check_rearrangement_steps(8),
                                             phirho::check_rearrangement_anchors()};
         }},
    };
    return run(criteria);
}
