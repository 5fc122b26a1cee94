#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "phirho/grid_oracle.hpp"
#include "phirho/segment_map.hpp"
#include "phirho/shuffles.hpp"

using namespace phirho;

namespace {
double m_cdf(double u, double v) { return std::min(u, v); }
double w_cdf(double u, double v) { return std::max(u + v - 1.0, 0.0); }
double pi_cdf(double u, double v) { return u * v; }
}  // namespace

TEST_CASE("error bounds are 3/n and 24/n") {
    const Estimate p = phi_numeric(m_cdf, GridOracleConfig{100});
    CHECK(p.error_bound == Rational(3, 100));
    const Estimate r = rho_numeric(m_cdf, GridOracleConfig{100});
    CHECK(r.error_bound == Rational(24, 100));
    // default resolution
    CHECK(phi_numeric(m_cdf).error_bound == Rational(3, 512));
    CHECK_THROWS_AS(phi_numeric(m_cdf, GridOracleConfig{0}), std::invalid_argument);
}

TEST_CASE("estimates bracket the known values") {
    struct Case {
        CdfCallable cdf;
        double phi, rho;
    };
    const Case cases[] = {
        {m_cdf, 1.0, 1.0},
        {w_cdf, -0.5, -1.0},
        {pi_cdf, 0.0, 0.0},
    };
    for (const Case& c : cases) {
        for (int n : {64, 256, 1024}) {
            const GridOracleConfig cfg{n};
            const Estimate p = phi_numeric(c.cdf, cfg);
            CHECK(std::abs(p.value - c.phi) <= p.error_bound.to_double());
            const Estimate r = rho_numeric(c.cdf, cfg);
            CHECK(std::abs(r.value - c.rho) <= r.error_bound.to_double());
        }
    }
}

TEST_CASE("midpoint quadrature is much tighter than the bound in practice") {
    // product copula: smooth, so the midpoint rule converges quadratically
    const Estimate p = phi_numeric(pi_cdf, GridOracleConfig{512});
    CHECK(std::abs(p.value) < 1e-5);
    const Estimate r = rho_numeric(pi_cdf, GridOracleConfig{512});
    CHECK(std::abs(r.value) < 1e-5);
}

TEST_CASE("oracle agrees with exact shuffle statistics") {
    const Involution p = Involution::validated(8, {4, 7, 8, 1, 6, 5, 2, 3});
    const SegmentMap m = shuffle_support(p);
    const CdfCallable fn = [&m](double u, double v) { return cdf(m, u, v); };
    for (int n : {128, 500}) {
        const GridOracleConfig cfg{n};
        const Estimate ephi = phi_numeric(fn, cfg);
        CHECK(std::abs(ephi.value - (-5.0 / 16.0)) <= ephi.error_bound.to_double());
        const Estimate erho = rho_numeric(fn, cfg);
        CHECK(std::abs(erho.value - (-13.0 / 32.0)) <= erho.error_bound.to_double());
    }
}
