#pragma once

#include <vector>

#include "subdiff/grid.hpp"
#include "subdiff/norms.hpp"

namespace subdiff {

/// Full subdiffusion instance d_t^alpha u - u_xx = f on (0,T) x (0,L),
/// Dirichlet boundary, u(0) = g, in the sine eigenbasis.
struct ProblemSpec {
    FracOrder alpha;          // in (1/2, 1)
    TimeGrid grid;
    double length{};          // L
    SpectralField initial;    // g_1 .. g_M
    ModeTrajectories forcing; // f_k(t_i) rows

    ProblemSpec(FracOrder a, const TimeGrid& g, double L, SpectralField g0, ModeTrajectories f);
    int mode_count() const { return initial.mode_count(); }
    double eigenvalue(int k) const { return initial.eigenvalue(k); }
};

struct Eigenpair {
    int index;      // k
    double lambda;  // (k pi / L)^2
};

/// Dirichlet-Laplacian eigenpairs of (0, L); w_k(x) = sqrt(2/L) sin(k pi x / L).
std::vector<Eigenpair> eigenpairs(double length, int count);

/// Pointwise eigenfunction value w_k(x).
double eigenfunction_value(double length, int k, double x);

/// Homogeneous mode g_k E_{alpha,1}(-lambda t^alpha); exactly g_k at t = 0.
GridFunction mode_homogeneous(FracOrder alpha, double lambda, double g_k, const TimeGrid& grid);

/// Forced mode psi(t) = alpha int_0^t f(t-s) s^{alpha-1} E'_{alpha}(-lambda s^alpha) ds
/// by product integration: exact moments of the weight alpha s^{alpha-1} against the
/// piecewise-linear interpolant of f, with E' sampled at cell midpoints.
GridFunction mode_forced(FracOrder alpha, double lambda, const GridFunction& f_k);

struct SolutionField {
    ModeTrajectories traj;
    ProblemSpec problem;
};

/// Per-mode Mittag-Leffler solution of the diagonal mode system.
SolutionField solve(const ProblemSpec& problem);

/// Synthesize u(t, x) = sum_k d_k(t) w_k(x); t must be a grid node, x in [0, L].
double evaluate(const SolutionField& sol, double t, double x);

/// (||u||_{L2(J;H1)} + ||u||_{H^alpha(J;H-1)}) / (||g||_{H^{1-1/alpha+delta}} + ||f||_{L2(J;H-1)}).
/// Requires delta > 0, 1 - 1/alpha + delta in [-1, 1], and nonzero data.
double stability_ratio(const ProblemSpec& problem, double delta);

/// Same problem re-sampled on an n-cell grid (forcing interpolated linearly).
ProblemSpec with_cells(const ProblemSpec& problem, int n);

}  // namespace subdiff
