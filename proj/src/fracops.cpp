#include "subdiff/fracops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "subdiff/gamma.hpp"

namespace subdiff {

namespace {

void require_range(double v, double lo, double hi, const char* what) {
    if (!(v > lo) || !(v < hi) || !std::isfinite(v))
        throw std::invalid_argument(std::string(what) + " out of range");
}

}  // namespace

GridFunction rl_left_integral(FracOrder beta, const GridFunction& f) {
    require_range(beta.value, 0.0, 1.0, "rl integral order beta");
    const int n = f.grid.cells;
    const long double b = beta.value;
    const long double tau = f.grid.tau();

    // cell [t_j, t_{j+1}] against kernel (t_i - s)^{b-1}, a = i-j-1:
    //   weight of f_j:     A(a) = (a1^{b+1}-a^{b+1})/(b+1) - a (a1^b - a^b)/b
    //   weight of f_{j+1}: B(a) = a1 (a1^b - a^b)/b - (a1^{b+1}-a^{b+1})/(b+1)
    // with a1 = a+1, all scaled by tau^b/Gamma(b).
    std::vector<long double> pb((std::size_t)n + 1), pb1((std::size_t)n + 1);
    for (int r = 0; r <= n; ++r) {
        pb[(std::size_t)r] = std::pow((long double)r, b);
        pb1[(std::size_t)r] = std::pow((long double)r, b + 1.0L);
    }
    std::vector<long double> A((std::size_t)n), B((std::size_t)n);
    for (int a = 0; a < n; ++a) {
        long double db = pb[(std::size_t)a + 1] - pb[(std::size_t)a];
        long double db1 = pb1[(std::size_t)a + 1] - pb1[(std::size_t)a];
        A[(std::size_t)a] = db1 / (b + 1.0L) - a * db / b;
        B[(std::size_t)a] = (a + 1.0L) * db / b - db1 / (b + 1.0L);
    }

    const long double scale = std::pow(tau, b) * rgamma_ld(b);
    GridFunction out(f.grid);
    for (int i = 1; i <= n; ++i) {
        long double acc = 0.0L;
        for (int j = 0; j < i; ++j) {
            std::size_t a = (std::size_t)(i - j - 1);
            acc += A[a] * (long double)f[j] + B[a] * (long double)f[j + 1];
        }
        out[i] = (double)(scale * acc);
    }
    return out;
}

GridFunction rl_right_integral(FracOrder beta, const GridFunction& f) {
    // change of variables t -> T - t reduces to the left integral
    GridFunction rev(f.grid);
    const int n = f.grid.cells;
    for (int i = 0; i <= n; ++i) rev[i] = f[n - i];
    GridFunction left = rl_left_integral(beta, rev);
    GridFunction out(f.grid);
    for (int i = 0; i <= n; ++i) out[i] = left[n - i];
    return out;
}

GridFunction caputo_l1(FracOrder alpha, const GridFunction& f) {
    require_range(alpha.value, 0.0, 1.0, "Caputo order alpha");
    const int n = f.grid.cells;
    const long double a = alpha.value;
    const long double tau = f.grid.tau();

    std::vector<long double> b((std::size_t)n + 1);  // b[r] = r^{1-alpha}
    for (int r = 0; r <= n; ++r) b[(std::size_t)r] = std::pow((long double)r, 1.0L - a);

    const long double scale = std::pow(tau, -a) * rgamma_ld(2.0L - a);
    GridFunction out(f.grid);
    out[0] = 0.0;  // not defined at t_0
    for (int i = 1; i <= n; ++i) {
        long double acc = 0.0L;
        for (int j = 0; j < i; ++j) {
            std::size_t r = (std::size_t)(i - j);
            acc += (b[r] - b[r - 1]) * ((long double)f[j + 1] - (long double)f[j]);
        }
        out[i] = (double)(scale * acc);
    }
    return out;
}

GridFunction caputo_via_rl(FracOrder alpha, const GridFunction& f) {
    require_range(alpha.value, 0.0, 1.0, "Caputo order alpha");
    const int n = f.grid.cells;
    const long double a = alpha.value;
    const long double tau = f.grid.tau();

    // difference quotients at cell midpoints
    std::vector<long double> g((std::size_t)n);
    for (int j = 0; j < n; ++j) g[(std::size_t)j] = ((long double)f[j + 1] - (long double)f[j]) / tau;

    // order 1-alpha integral of the midpoint-interpolated derivative:
    // segments [0, m_0] (constant g_0), [m_j, m_{j+1}] (linear), and the
    // trailing causal half-cell [m_{i-1}, t_i] (constant g_{i-1}).
    // Kernel moments over [m_{r-?}..]: with p1[r] = ((r-1/2) tau)^{1-a},
    // p2[r] = ((r-1/2) tau)^{2-a}:
    //   K0(r) = (p1[r] - p1[r-1])/(1-a)
    //   K1(r) = (r-1/2) tau (p1[r]-p1[r-1])/(1-a) - (p2[r]-p2[r-1])/(2-a)
    std::vector<long double> p1((std::size_t)n + 2, 0.0L), p2((std::size_t)n + 2, 0.0L);
    for (int r = 1; r <= n + 1; ++r) {
        long double x = (r - 0.5L) * tau;
        p1[(std::size_t)r] = std::pow(x, 1.0L - a);
        p2[(std::size_t)r] = std::pow(x, 2.0L - a);
    }
    std::vector<long double> W0((std::size_t)n + 1, 0.0L), W1((std::size_t)n + 1, 0.0L);
    for (int r = 2; r <= n; ++r) {
        long double k0 = (p1[(std::size_t)r] - p1[(std::size_t)r - 1]) / (1.0L - a);
        long double k1 = (r - 0.5L) * tau * (p1[(std::size_t)r] - p1[(std::size_t)r - 1]) / (1.0L - a)
                         - (p2[(std::size_t)r] - p2[(std::size_t)r - 1]) / (2.0L - a);
        W0[(std::size_t)r] = k0 - k1 / tau;
        W1[(std::size_t)r] = k1 / tau;
    }

    const long double scale = rgamma_ld(1.0L - a);
    const long double trail = std::pow(tau / 2.0L, 1.0L - a) / (1.0L - a);
    GridFunction out(f.grid);
    out[0] = 0.0;
    for (int i = 1; i <= n; ++i) {
        long double t = i * tau;
        long double lead = (std::pow(t, 1.0L - a) - std::pow(t - tau / 2.0L, 1.0L - a)) / (1.0L - a);
        long double acc = g[0] * lead + g[(std::size_t)i - 1] * trail;
        for (int j = 0; j <= i - 2; ++j) {
            std::size_t r = (std::size_t)(i - j);
            acc += g[(std::size_t)j] * W0[r] + g[(std::size_t)j + 1] * W1[r];
        }
        out[i] = (double)(scale * acc);
    }
    return out;
}

}  // namespace subdiff
