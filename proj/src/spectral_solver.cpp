#include "subdiff/spectral_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "subdiff/gamma.hpp"
#include "subdiff/mittag_leffler.hpp"

namespace subdiff {

namespace {

bool all_zero(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

}  // namespace

ProblemSpec::ProblemSpec(FracOrder a, const TimeGrid& g, double L, SpectralField g0, ModeTrajectories f)
    : alpha(a), grid(g), length(L), initial(std::move(g0)), forcing(std::move(f)) {
    if (!(alpha.value > 0.5) || !(alpha.value < 1.0))
        throw std::invalid_argument("ProblemSpec: alpha must lie in (1/2, 1)");
    if (!(length > 0.0) || !std::isfinite(length))
        throw std::invalid_argument("ProblemSpec: L must be positive");
    if (initial.length != length || forcing.length != length)
        throw std::invalid_argument("ProblemSpec: initial data and forcing must share L");
    if (initial.mode_count() != forcing.mode_count())
        throw std::invalid_argument("ProblemSpec: initial data and forcing must share mode count");
    if (!(forcing.grid == grid))
        throw std::invalid_argument("ProblemSpec: forcing must live on the problem grid");
}

std::vector<Eigenpair> eigenpairs(double length, int count) {
    if (!(length > 0.0) || count < 1) throw std::invalid_argument("eigenpairs: need L > 0 and count >= 1");
    std::vector<Eigenpair> out;
    out.reserve((std::size_t)count);
    for (int k = 1; k <= count; ++k) {
        double w = k * std::numbers::pi / length;
        out.push_back({k, w * w});
    }
    return out;
}

double eigenfunction_value(double length, int k, double x) {
    if (!(x >= 0.0) || !(x <= length)) throw std::invalid_argument("eigenfunction_value: x outside [0, L]");
    return std::sqrt(2.0 / length) * std::sin(k * std::numbers::pi * x / length);
}

GridFunction mode_homogeneous(FracOrder alpha, double lambda, double g_k, const TimeGrid& grid) {
    if (!(lambda >= 0.0)) throw std::invalid_argument("mode_homogeneous: lambda must be nonnegative");
    MLParams p{alpha.value, 1.0};
    GridFunction out(grid);
    out[0] = g_k;  // E(0) = 1 exactly
    for (int i = 1; i <= grid.cells; ++i)
        out[i] = g_k * ml(p, -lambda * std::pow(grid.node(i), alpha.value));
    return out;
}

GridFunction mode_forced(FracOrder alpha, double lambda, const GridFunction& f_k) {
    if (!(lambda >= 0.0)) throw std::invalid_argument("mode_forced: lambda must be nonnegative");
    const double a = alpha.value;
    const TimeGrid& grid = f_k.grid;
    const int n = grid.cells;
    const long double tau = grid.tau();

    GridFunction out(grid);
    if (all_zero(f_k.values)) return out;

    // exact moments of alpha s^{a-1} over cell j:
    //   V1[j] = int (s - t_j) alpha s^{a-1} ds,  V0[j] = int (t_{j+1} - s) alpha s^{a-1} ds
    // f(t_i - s) is piecewise linear: on cell j it interpolates f_{i-j-1} (at s=t_{j+1})
    // and f_{i-j} (at s=t_j); E' is frozen at the cell midpoint.
    std::vector<long double> W0((std::size_t)n), W1((std::size_t)n);
    for (int j = 0; j < n; ++j) {
        long double tj = j * tau, tj1 = (j + 1) * tau;
        long double pa = std::pow(tj, (long double)a), pa1 = std::pow(tj1, (long double)a);
        long double paa = std::pow(tj, (long double)a + 1.0L), paa1 = std::pow(tj1, (long double)a + 1.0L);
        long double v1 = (long double)a / (a + 1.0L) * (paa1 - paa) - tj * (pa1 - pa);
        long double v0 = tj1 * (pa1 - pa) - (long double)a / (a + 1.0L) * (paa1 - paa);
        long double mid = (j + 0.5L) * tau;
        long double ep = ml_deriv(a, -lambda * (double)std::pow(mid, (long double)a));
        W1[(std::size_t)j] = ep * v1 / tau;  // weight of f_{i-j-1}
        W0[(std::size_t)j] = ep * v0 / tau;  // weight of f_{i-j}
    }
    for (int i = 1; i <= n; ++i) {
        long double acc = 0.0L;
        for (int j = 0; j < i; ++j)
            acc += W1[(std::size_t)j] * (long double)f_k[i - j - 1] + W0[(std::size_t)j] * (long double)f_k[i - j];
        out[i] = (double)acc;
    }
    return out;
}

SolutionField solve(const ProblemSpec& problem) {
    const int M = problem.mode_count();
    std::vector<std::vector<double>> rows;
    rows.reserve((std::size_t)M);
    for (int k = 1; k <= M; ++k) {
        double lam = problem.eigenvalue(k);
        GridFunction hom = mode_homogeneous(problem.alpha, lam, problem.initial.coeffs[(std::size_t)k - 1],
                                            problem.grid);
        GridFunction frc = mode_forced(problem.alpha, lam,
                                       GridFunction(problem.grid, problem.forcing.modes[(std::size_t)k - 1]));
        std::vector<double> row((std::size_t)problem.grid.cells + 1);
        for (int i = 0; i <= problem.grid.cells; ++i) row[(std::size_t)i] = hom[i] + frc[i];
        rows.push_back(std::move(row));
    }
    return SolutionField{ModeTrajectories(problem.grid, problem.length, std::move(rows)), problem};
}

double evaluate(const SolutionField& sol, double t, double x) {
    const TimeGrid& grid = sol.traj.grid;
    double pos = t / grid.tau();
    int i = (int)std::lround(pos);
    if (i < 0 || i > grid.cells || std::fabs(pos - i) > 1e-9 * grid.cells)
        throw std::invalid_argument("evaluate: t must be a grid node");
    if (!(x >= 0.0) || !(x <= sol.traj.length))
        throw std::invalid_argument("evaluate: x outside [0, L]");
    double acc = 0.0;
    for (int k = 1; k <= sol.traj.mode_count(); ++k)
        acc += sol.traj.modes[(std::size_t)k - 1][(std::size_t)i]
               * eigenfunction_value(sol.traj.length, k, x);
    return acc;
}

double stability_ratio(const ProblemSpec& problem, double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("stability_ratio: delta must be positive");
    const double s_g = 1.0 - 1.0 / problem.alpha.value + delta;
    if (!(s_g >= -1.0) || !(s_g <= 1.0))
        throw std::invalid_argument("stability_ratio: 1 - 1/alpha + delta outside [-1, 1]");

    SolutionField sol = solve(problem);
    SolutionNorms norms = full_solution_norm(problem.alpha, sol.traj);

    double gnorm = spatial_norm(s_g, problem.initial);
    double fnorm_sq = 0.0;
    for (int k = 1; k <= problem.mode_count(); ++k)
        fnorm_sq += trapezoid_sq(problem.grid, problem.forcing.modes[(std::size_t)k - 1])
                    / problem.eigenvalue(k);
    double denom = gnorm + std::sqrt(fnorm_sq);
    if (denom == 0.0) throw std::invalid_argument("stability_ratio: zero data");
    return (norms.l2_h1 + norms.halpha_hm1) / denom;
}

ProblemSpec with_cells(const ProblemSpec& problem, int n) {
    TimeGrid grid(problem.grid.horizon, n);
    std::vector<std::vector<double>> rows;
    rows.reserve((std::size_t)problem.mode_count());
    const int n_old = problem.grid.cells;
    for (const auto& row : problem.forcing.modes) {
        std::vector<double> out((std::size_t)n + 1);
        for (int i = 0; i <= n; ++i) {
            // linear interpolation of the old samples at the new node
            double pos = (double)i * n_old / n;
            int j = std::min((int)pos, n_old - 1);
            double w = pos - j;
            out[(std::size_t)i] = (1.0 - w) * row[(std::size_t)j] + w * row[(std::size_t)j + 1];
        }
        rows.push_back(std::move(out));
    }
    return ProblemSpec(problem.alpha, grid, problem.length, problem.initial,
                       ModeTrajectories(grid, problem.length, std::move(rows)));
}

}  // namespace subdiff
