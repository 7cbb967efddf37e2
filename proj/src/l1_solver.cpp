#include "subdiff/l1_solver.hpp"

#include <cmath>
#include <stdexcept>

#include "subdiff/gamma.hpp"

namespace subdiff {

SolutionField solve_l1(const ProblemSpec& problem) {
    const double a = problem.alpha.value;
    const TimeGrid& grid = problem.grid;
    const int n = grid.cells;
    const long double tau = grid.tau();

    std::vector<long double> w((std::size_t)n);  // b_j = (j+1)^{1-a} - j^{1-a}
    for (int j = 0; j < n; ++j)
        w[(std::size_t)j] = std::pow((long double)j + 1.0L, 1.0L - a) - std::pow((long double)j, 1.0L - a);

    const long double c = std::pow(tau, (long double)-a) * rgamma_ld(2.0L - a);
    std::vector<std::vector<double>> rows;
    rows.reserve((std::size_t)problem.mode_count());
    for (int k = 1; k <= problem.mode_count(); ++k) {
        const long double lam = problem.eigenvalue(k);
        const auto& fk = problem.forcing.modes[(std::size_t)k - 1];
        std::vector<long double> d((std::size_t)n + 1);
        d[0] = problem.initial.coeffs[(std::size_t)k - 1];
        for (int m = 1; m <= n; ++m) {
            // c (b_0 d^m - hist) + lam d^m = f^m, solved for d^m; b_0 = 1
            long double hist = w[(std::size_t)m - 1] * d[0];
            for (int j = 1; j < m; ++j)
                hist += (w[(std::size_t)(m - j - 1)] - w[(std::size_t)(m - j)]) * d[(std::size_t)j];
            d[(std::size_t)m] = (c * hist + (long double)fk[(std::size_t)m]) / (c + lam);
        }
        rows.emplace_back(d.begin(), d.end());
    }
    return SolutionField{ModeTrajectories(grid, problem.length, std::move(rows)), problem};
}

namespace {

double linf_l2_distance(const ModeTrajectories& a, const ModeTrajectories& b) {
    double worst = 0.0;
    for (int i = 0; i <= a.grid.cells; ++i) {
        double acc = 0.0;
        for (int k = 0; k < a.mode_count(); ++k) {
            double diff = a.modes[(std::size_t)k][(std::size_t)i] - b.modes[(std::size_t)k][(std::size_t)i];
            acc += diff * diff;
        }
        worst = std::max(worst, acc);
    }
    return std::sqrt(worst);
}

}  // namespace

double fit_decay_order(const std::vector<int>& cells, const std::vector<double>& errors) {
    // slope of log(err) vs log(tau); zero errors are treated as converged
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (errors[i] <= 0.0) continue;
        double x = -std::log((double)cells[i]);
        double y = std::log(errors[i]);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++m;
    }
    if (m < 2) return 0.0;
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

ConvergenceReport cross_validate(const ProblemSpec& problem, int refinements) {
    if (refinements < 2) throw std::invalid_argument("cross_validate: need at least 2 refinements");
    ConvergenceReport report;
    int n = problem.grid.cells;
    for (int r = 0; r < refinements; ++r, n *= 2) {
        ProblemSpec p = with_cells(problem, n);
        SolutionField spec = solve(p);
        SolutionField l1 = solve_l1(p);
        report.cells.push_back(n);
        report.distances.push_back(linf_l2_distance(spec.traj, l1.traj));
    }
    report.fitted_order = fit_decay_order(report.cells, report.distances);
    return report;
}

}  // namespace subdiff
