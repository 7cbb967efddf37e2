#pragma once

#include <span>
#include <vector>

#include "subdiff/grid.hpp"

namespace subdiff {

/// Coefficients against the Dirichlet sine eigenbasis w_k(x) = sqrt(2/L) sin(k pi x / L)
/// of the interval (0, L); eigenvalues lambda_k = (k pi / L)^2.
struct SpectralField {
    double length{};
    std::vector<double> coeffs;  // g_1 .. g_M

    SpectralField(double L, std::vector<double> c);
    int mode_count() const { return (int)coeffs.size(); }
    double eigenvalue(int k) const;  // 1-based
};

/// Per-mode time trajectories d_k(t_i) on a shared grid over (0, L).
struct ModeTrajectories {
    TimeGrid grid;
    double length{};
    std::vector<std::vector<double>> modes;  // M rows of grid.cells+1 samples

    ModeTrajectories(const TimeGrid& g, double L, std::vector<std::vector<double>> rows);
    int mode_count() const { return (int)modes.size(); }
    double eigenvalue(int k) const;  // 1-based
};

/// Precomputed weights for the discrete Slobodeckij seminorm on a fixed
/// (alpha, grid) pair; the double integral of the piecewise-linear
/// interpolant is evaluated exactly (near-diagonal closed forms, Gauss
/// moments for separated cell pairs).
class SlobodeckijKernel {
public:
    SlobodeckijKernel(FracOrder alpha, const TimeGrid& grid);
    double seminorm_sq(std::span<const double> node_values) const;

private:
    int cells_;
    double tau_;
    double diag_, adj_i2_, adj_j_;
    std::vector<double> far_j0_, far_j1_, far_a2_, far_b2_;
};

/// |f|_{H^alpha(J)} via the Slobodeckij double integral, alpha in (0,1).
double slobodeckij_seminorm(FracOrder alpha, const GridFunction& f);

/// || caputo_via_rl(alpha, f) ||_{L2(t_1..t_n)} by trapezoid rule; equivalent
/// seminorm for alpha in (1/2, 1).
double seminorm_via_rl(FracOrder alpha, const GridFunction& f);

/// Spectral spatial norm (sum_k lambda_k^s g_k^2)^{1/2}, s in [-1, 1].
double spatial_norm(double s, const SpectralField& field);

/// Time-fractional Bochner seminorm (sum_k lambda_k^s |d_k|_{H^alpha}^2)^{1/2}.
double bochner_seminorm(FracOrder alpha, double s, const ModeTrajectories& traj);

struct SolutionNorms {
    double l2_h1;       // || u ||_{L2(J; H^1_0)}
    double halpha_hm1;  // || u ||_{H^alpha(J; H^-1)}
};

/// The two norms appearing on the left side of the well-posedness estimate.
SolutionNorms full_solution_norm(FracOrder alpha, const ModeTrajectories& traj);

/// Trapezoid quadrature of f^2 over the full grid.
double trapezoid_sq(const TimeGrid& grid, std::span<const double> values);

}  // namespace subdiff
