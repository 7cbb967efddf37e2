#pragma once

#include "subdiff/errors.hpp"

namespace subdiff {

/// Parameters of the two-parameter Mittag-Leffler function E_{alpha,beta}.
struct MLParams {
    double alpha{};  // in (0, 2]
    double beta{};   // > 0

    void validate() const;
};

/// E_{alpha,beta}(z) = sum_k z^k / Gamma(alpha k + beta) on the real line.
///
/// Certified to absolute-or-relative accuracy 1e-10 (internal target 1e-11).
/// Evaluation switches between a Taylor branch (long double Kahan summation,
/// escalating to MPFR when the cancellation estimate cannot certify the
/// target) and the negative-axis asymptotic expansion
///   E_{alpha,beta}(z) ~ -sum_{k>=1} z^{-k} / Gamma(beta - alpha k).
///
/// Throws std::invalid_argument for parameters outside the admissible range
/// and certification_error when no branch certifies the tolerance.
double ml(const MLParams& params, double z);

/// d/dz E_{alpha,1}(z) for alpha in (0,1]; >= 0 for z < 0.
double ml_deriv(double alpha, double z);

}  // namespace subdiff
