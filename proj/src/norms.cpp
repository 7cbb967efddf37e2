#include "subdiff/norms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "subdiff/fracops.hpp"

namespace subdiff {

namespace {

// 8-point Gauss-Legendre on [-1, 1]
constexpr double kGx[8] = {
    -0.9602898564975362316835609, -0.7966664774136267395915539,
    -0.5255324099163289858177390, -0.1834346424956498049394761,
    0.1834346424956498049394761,  0.5255324099163289858177390,
    0.7966664774136267395915539,  0.9602898564975362316835609,
};
constexpr double kGw[8] = {
    0.1012285362903762591525314, 0.2223810344533744705443560,
    0.3137066458778872873379622, 0.3626837833783619829651504,
    0.3626837833783619829651504, 0.3137066458778872873379622,
    0.2223810344533744705443560, 0.1012285362903762591525314,
};

// int_a^b u^p du with 0 <= a < b, stable near p = -1
double powint(double p, double a, double b) {
    if (a == 0.0) return std::pow(b, p + 1.0) / (p + 1.0);
    double t = (p + 1.0) * std::log(b / a);
    double f = std::fabs(t) < 1e-10 ? 1.0 + t / 2.0 + t * t / 6.0 : std::expm1(t) / t;
    return std::pow(a, p + 1.0) * std::log(b / a) * f;
}

void check_mode_sizes(const TimeGrid& g, const std::vector<std::vector<double>>& rows) {
    for (const auto& r : rows) {
        if (r.size() != (std::size_t)g.cells + 1)
            throw std::invalid_argument("ModeTrajectories: row length must equal node count");
        for (double x : r)
            if (!std::isfinite(x)) throw std::invalid_argument("ModeTrajectories: values must be finite");
    }
}

}  // namespace

SpectralField::SpectralField(double L, std::vector<double> c) : length(L), coeffs(std::move(c)) {
    if (!(L > 0.0) || !std::isfinite(L)) throw std::invalid_argument("SpectralField: L must be positive");
    if (coeffs.empty()) throw std::invalid_argument("SpectralField: need at least one mode");
    for (double x : coeffs)
        if (!std::isfinite(x)) throw std::invalid_argument("SpectralField: coefficients must be finite");
}

double SpectralField::eigenvalue(int k) const {
    double w = k * std::numbers::pi / length;
    return w * w;
}

ModeTrajectories::ModeTrajectories(const TimeGrid& g, double L, std::vector<std::vector<double>> rows)
    : grid(g), length(L), modes(std::move(rows)) {
    if (!(L > 0.0) || !std::isfinite(L)) throw std::invalid_argument("ModeTrajectories: L must be positive");
    check_mode_sizes(grid, modes);
}

double ModeTrajectories::eigenvalue(int k) const {
    double w = k * std::numbers::pi / length;
    return w * w;
}

SlobodeckijKernel::SlobodeckijKernel(FracOrder alpha, const TimeGrid& grid)
    : cells_(grid.cells), tau_(grid.tau()) {
    const double a = alpha.value;
    if (!(a > 0.0) || !(a < 1.0) || !std::isfinite(a))
        throw std::invalid_argument("Slobodeckij seminorm order must lie in (0,1)");
    const double tau = tau_;

    // same cell: |f(s)-f(t)|^2 = sigma^2 (s-t)^2
    diag_ = 2.0 * std::pow(tau, 3.0 - 2.0 * a) / ((2.0 - 2.0 * a) * (3.0 - 2.0 * a));

    // adjacent cells: contribution 2 [A^2 I2 + B^2 J] with
    // A = (sigma_i + sigma_{i+1})/2, B = (sigma_{i+1} - sigma_i)/2
    adj_i2_ = powint(2.0 - 2.0 * a, 0.0, tau) + 2.0 * tau * powint(1.0 - 2.0 * a, tau, 2.0 * tau)
              - powint(2.0 - 2.0 * a, tau, 2.0 * tau);
    adj_j_ = (powint(2.0 - 2.0 * a, 0.0, tau) + 8.0 * tau * tau * tau * powint(-2.0 * a - 1.0, tau, 2.0 * tau)
              - 12.0 * tau * tau * powint(-2.0 * a, tau, 2.0 * tau)
              + 6.0 * tau * powint(1.0 - 2.0 * a, tau, 2.0 * tau)
              - powint(2.0 - 2.0 * a, tau, 2.0 * tau)) / 3.0;

    // separated pairs, distance d >= 2: with c = d tau and q = x - y,
    //   j0 = int (tau-|q|) phi(c+q) dq          (kernel mass)
    //   j1 = int q (tau-|q|) phi(c+q) dq        (first moment)
    //   j2 = int q^2 (tau-|q|) phi(c+q) dq
    //   jS = int (tau-|q|)^3/3 phi(c+q) dq
    // contribution = Del^2 j0 + Del (s_i+s_j) j1 + (s_i^2+s_j^2)(jS+j2)/4 - s_i s_j (jS-j2)/2
    const int n = cells_;
    far_j0_.assign((std::size_t)n, 0.0);
    far_j1_.assign((std::size_t)n, 0.0);
    far_a2_.assign((std::size_t)n, 0.0);
    far_b2_.assign((std::size_t)n, 0.0);
    const double ex = -2.0 * a - 1.0;
    for (int d = 2; d < n; ++d) {
        const double c = d * tau;
        double j0 = 0.0, j1 = 0.0, j2 = 0.0, jS = 0.0;
        for (int l = 0; l < 8; ++l) {
            double r = 0.5 * tau * (kGx[l] + 1.0);
            double w = 0.5 * tau * kGw[l];
            double pp = std::pow(c + r, ex);
            double pm = std::pow(c - r, ex);
            double lin = tau - r;
            j0 += w * lin * (pp + pm);
            j1 += w * lin * r * (pp - pm);
            j2 += w * lin * r * r * (pp + pm);
            jS += w * lin * lin * lin / 3.0 * (pp + pm);
        }
        far_j0_[(std::size_t)d] = j0;
        far_j1_[(std::size_t)d] = j1;
        far_a2_[(std::size_t)d] = (jS + j2) / 4.0;
        far_b2_[(std::size_t)d] = -(jS - j2) / 2.0;
    }
}

double SlobodeckijKernel::seminorm_sq(std::span<const double> v) const {
    if ((int)v.size() != cells_ + 1)
        throw std::invalid_argument("seminorm_sq: value count must equal node count");
    const int n = cells_;
    const double tau = tau_;
    std::vector<double> sig((std::size_t)n), mid((std::size_t)n);
    for (int i = 0; i < n; ++i) {
        sig[(std::size_t)i] = (v[(std::size_t)i + 1] - v[(std::size_t)i]) / tau;
        mid[(std::size_t)i] = 0.5 * (v[(std::size_t)i + 1] + v[(std::size_t)i]);
    }
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += sig[(std::size_t)i] * sig[(std::size_t)i];
    total *= diag_;
    for (int i = 0; i + 1 < n; ++i) {
        double A = 0.5 * (sig[(std::size_t)i] + sig[(std::size_t)i + 1]);
        double B = 0.5 * (sig[(std::size_t)i + 1] - sig[(std::size_t)i]);
        total += 2.0 * (A * A * adj_i2_ + B * B * adj_j_);
    }
    for (int d = 2; d < n; ++d) {
        double sd = 0.0, sc = 0.0, ss = 0.0, sp = 0.0;
        for (int i = 0; i + d < n; ++i) {
            double del = mid[(std::size_t)i + d] - mid[(std::size_t)i];
            double si = sig[(std::size_t)i], sj = sig[(std::size_t)i + d];
            sd += del * del;
            sc += del * (si + sj);
            ss += si * si + sj * sj;
            sp += si * sj;
        }
        total += 2.0 * (sd * far_j0_[(std::size_t)d] + sc * far_j1_[(std::size_t)d]
                        + ss * far_a2_[(std::size_t)d] + sp * far_b2_[(std::size_t)d]);
    }
    return total;
}

double slobodeckij_seminorm(FracOrder alpha, const GridFunction& f) {
    SlobodeckijKernel kernel(alpha, f.grid);
    return std::sqrt(kernel.seminorm_sq(f.values));
}

double seminorm_via_rl(FracOrder alpha, const GridFunction& f) {
    if (!(alpha.value > 0.5) || !(alpha.value < 1.0))
        throw std::invalid_argument("seminorm_via_rl: alpha must lie in (1/2, 1)");
    GridFunction g = caputo_via_rl(alpha, f);
    // trapezoid over t_1 .. t_n; node 0 carries no operator value
    const int n = f.grid.cells;
    const double tau = f.grid.tau();
    double acc = 0.5 * (g[1] * g[1] + g[n] * g[n]);
    for (int i = 2; i < n; ++i) acc += g[i] * g[i];
    return std::sqrt(tau * acc);
}

double spatial_norm(double s, const SpectralField& field) {
    if (!(s >= -1.0) || !(s <= 1.0))
        throw std::invalid_argument("spatial_norm: s must lie in [-1, 1]");
    double acc = 0.0;
    for (int k = 1; k <= field.mode_count(); ++k) {
        double g = field.coeffs[(std::size_t)k - 1];
        acc += std::pow(field.eigenvalue(k), s) * g * g;
    }
    return std::sqrt(acc);
}

double bochner_seminorm(FracOrder alpha, double s, const ModeTrajectories& traj) {
    if (!(s >= -1.0) || !(s <= 1.0))
        throw std::invalid_argument("bochner_seminorm: s must lie in [-1, 1]");
    SlobodeckijKernel kernel(alpha, traj.grid);
    double acc = 0.0;
    for (int k = 1; k <= traj.mode_count(); ++k)
        acc += std::pow(traj.eigenvalue(k), s) * kernel.seminorm_sq(traj.modes[(std::size_t)k - 1]);
    return std::sqrt(acc);
}

double trapezoid_sq(const TimeGrid& grid, std::span<const double> v) {
    const int n = grid.cells;
    double acc = 0.5 * (v[0] * v[0] + v[(std::size_t)n] * v[(std::size_t)n]);
    for (int i = 1; i < n; ++i) acc += v[(std::size_t)i] * v[(std::size_t)i];
    return grid.tau() * acc;
}

SolutionNorms full_solution_norm(FracOrder alpha, const ModeTrajectories& traj) {
    double h1 = 0.0, l2m1 = 0.0;
    for (int k = 1; k <= traj.mode_count(); ++k) {
        double mass = trapezoid_sq(traj.grid, traj.modes[(std::size_t)k - 1]);
        h1 += traj.eigenvalue(k) * mass;
        l2m1 += mass / traj.eigenvalue(k);
    }
    double sem = bochner_seminorm(alpha, -1.0, traj);
    return SolutionNorms{std::sqrt(h1), std::sqrt(l2m1 + sem * sem)};
}

}  // namespace subdiff
