#include "phirho/grid_oracle.hpp"

#include <stdexcept>

namespace phirho {

namespace {

struct KahanSum {
    double total = 0.0;
    double carry = 0.0;
    void add(double x) {
        const double y = x - carry;
        const double t = total + y;
        carry = (t - total) - y;
        total = t;
    }
};

int checked_resolution(const GridOracleConfig& cfg) {
    if (cfg.resolution < 1)
        throw std::invalid_argument("grid oracle: resolution must be positive");
    return cfg.resolution;
}

}  // namespace

Estimate phi_numeric(const CdfCallable& cdf, const GridOracleConfig& cfg) {
    const int n = checked_resolution(cfg);
    KahanSum sum;
    for (int i = 0; i < n; ++i) {
        const double m = (2 * i + 1) / (2.0 * n);
        sum.add(cdf(m, m));
    }
    Estimate est;
    est.value = 6.0 * sum.total / n - 2.0;
    est.error_bound = Rational(3, n);
    return est;
}

Estimate rho_numeric(const CdfCallable& cdf, const GridOracleConfig& cfg) {
    const int n = checked_resolution(cfg);
    KahanSum sum;
    for (int i = 0; i < n; ++i) {
        const double u = (2 * i + 1) / (2.0 * n);
        KahanSum row;
        for (int j = 0; j < n; ++j) {
            const double v = (2 * j + 1) / (2.0 * n);
            row.add(cdf(u, v));
        }
        sum.add(row.total);
    }
    Estimate est;
    est.value = 12.0 * sum.total / (static_cast<double>(n) * n) - 3.0;
    est.error_bound = Rational(24, n);
    return est;
}

}  // namespace phirho
