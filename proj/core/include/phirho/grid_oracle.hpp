#pragma once

// Midpoint-rule quadrature oracle for arbitrary copula CDFs, independent of
// every exact evaluation path.  The CDF is trusted to be a copula; the error
// bounds below are unconditional Lipschitz bounds, deliberately conservative.

#include <functional>

#include "phirho/rational.hpp"

namespace phirho {

struct GridOracleConfig {
    int resolution = 512;  // grid cells per axis
};

struct Estimate {
    double value = 0.0;
    Rational error_bound;  // |value - exact| <= error_bound, always
};

using CdfCallable = std::function<double(double, double)>;

// 6/n * sum C(m_i, m_i) - 2 over cell midpoints m_i; bound 3/n since the
// diagonal section is 2-Lipschitz.
Estimate phi_numeric(const CdfCallable& cdf, const GridOracleConfig& cfg = {});

// 12/n^2 * sum C(m_i, m_j) - 3; documented bound 24/n (1-Lipschitz per
// coordinate, with slack).
Estimate rho_numeric(const CdfCallable& cdf, const GridOracleConfig& cfg = {});

}  // namespace phirho
