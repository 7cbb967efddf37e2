#pragma once

namespace subdiff {

/// Gamma function on the real line, Lanczos approximation in long double.
/// Relative accuracy ~1e-18 on (0, 172); poles at nonpositive integers
/// produce +/-inf through the reflection formula.
long double gamma_ld(long double x);

/// log(Gamma(x)) for x > 0.
long double lgamma_ld(long double x);

/// 1/Gamma(x), entire; exactly 0 at x = 0, -1, -2, ...
long double rgamma_ld(long double x);

/// sin(pi x) with exact reduction on the integer part.
long double sinpi_ld(long double x);

inline double gamma_fn(double x) { return static_cast<double>(gamma_ld(x)); }
inline double rgamma(double x) { return static_cast<double>(rgamma_ld(x)); }

}  // namespace subdiff
