#pragma once

#include "subdiff/grid.hpp"

namespace subdiff {

/// Left Riemann-Liouville integral (1/Gamma(beta)) int_0^t (t-s)^{beta-1} f(s) ds,
/// beta in (0,1). Product integration: the piecewise-linear interpolant of f is
/// integrated against exact kernel moments per cell; nodewise O(tau^2) for smooth f
/// and exact for affine f.
GridFunction rl_left_integral(FracOrder beta, const GridFunction& f);

/// Right-sided mirror (1/Gamma(beta)) int_t^T (s-t)^{beta-1} f(s) ds.
GridFunction rl_right_integral(FracOrder beta, const GridFunction& f);

/// Caputo derivative by the classical L1 scheme, alpha in (0,1).
/// The value at node 0 is not defined by the operator and is stored as 0.
GridFunction caputo_l1(FracOrder alpha, const GridFunction& f);

/// Caputo derivative as {_0D}^{alpha-1} composed with the cell-midpoint
/// difference quotient; agrees with caputo_l1 up to discretization error.
/// Node 0 is stored as 0, same convention as caputo_l1.
GridFunction caputo_via_rl(FracOrder alpha, const GridFunction& f);

}  // namespace subdiff
