#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "subdiff/grid.hpp"

namespace testsupport {

// Direct series oracle for E_{a,b}(z); gamma via the C library (independent
// of the in-module Lanczos). Reliable for moderate |z| where cancellation in
// long double stays harmless.
inline long double ml_series_oracle(double alpha, double beta, double z, int terms = 400) {
    long double s = 0.0L, comp = 0.0L, zp = 1.0L;
    for (int k = 0; k < terms; ++k) {
        long double lg = lgammal((long double)alpha * k + (long double)beta);
        long double t = zp * std::exp(-lg);
        long double y = t - comp;
        long double snew = s + y;
        comp = (snew - s) - y;
        s = snew;
        zp *= (long double)z;
        if (k > 8 && std::fabs(t) < 1e-25L * (std::fabs(s) + 1e-30L)) break;
    }
    return s;
}

inline long double ml_deriv_series_oracle(double alpha, double z, int terms = 400) {
    // sum_{k>=1} k z^{k-1} / Gamma(alpha k + 1)
    long double s = 0.0L, comp = 0.0L, zp = 1.0L;
    for (int k = 1; k < terms; ++k) {
        long double lg = lgammal((long double)alpha * k + 1.0L);
        long double t = (long double)k * zp * std::exp(-lg);
        long double y = t - comp;
        long double snew = s + y;
        comp = (snew - s) - y;
        s = snew;
        zp *= (long double)z;
        if (k > 8 && std::fabs(t) < 1e-25L * (std::fabs(s) + 1e-30L)) break;
    }
    return s;
}

inline double trap_inner(const subdiff::TimeGrid& grid, std::span<const double> a,
                         std::span<const double> b) {
    std::size_t n = (std::size_t)grid.cells;
    double acc = 0.5 * (a[0] * b[0] + a[n] * b[n]);
    for (std::size_t i = 1; i < n; ++i) acc += a[i] * b[i];
    return grid.tau() * acc;
}

inline double polyval(std::span<const double> coeffs, double x) {
    double acc = 0.0;
    for (double c : coeffs) acc = acc * x + c;
    return acc;
}

inline double rel_err(double got, double want) {
    return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}

inline double abs_or_rel_err(double got, double want) {
    double d = std::fabs(got - want);
    return std::min(d, d / std::max(std::fabs(want), 1e-300));
}

}  // namespace testsupport
