#pragma once

#include <vector>

#include "subdiff/spectral_solver.hpp"

namespace subdiff {

/// Independent implicit L1 time-stepping solver for the same mode system;
/// discrete Caputo weights b_j = (j+1)^{1-alpha} - j^{1-alpha}, the reaction
/// term treated implicitly, forcing sampled at the new time level.
SolutionField solve_l1(const ProblemSpec& problem);

struct ConvergenceReport {
    std::vector<int> cells;
    std::vector<double> distances;  // discrete Linf(L2) between spectral and L1
    double fitted_order;
};

/// Solve with both solvers on a sequence of refined grids and report the
/// per-grid discrete Linf(L2(0,L)) distance plus the fitted decay order.
ConvergenceReport cross_validate(const ProblemSpec& problem, int refinements);

/// Least-squares slope of log(err) against log(1/n); 0 when all errors vanish.
double fit_decay_order(const std::vector<int>& cells, const std::vector<double>& errors);

}  // namespace subdiff
