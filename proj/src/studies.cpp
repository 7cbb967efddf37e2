#include "subdiff/studies.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "subdiff/mittag_leffler.hpp"

namespace subdiff {

ProblemSpec random_problem(double alpha, double delta, int modes, const TimeGrid& grid, double length,
                           std::uint64_t seed, int trial) {
    const double s_g = 1.0 - 1.0 / alpha + delta;
    std::vector<double> g((std::size_t)modes);
    std::vector<std::vector<double>> rows((std::size_t)modes);
    const double T = grid.horizon;
    for (int k = 1; k <= modes; ++k) {
        SplitMix64 rng(seed + 7919ull * (std::uint64_t)trial + 104729ull * (std::uint64_t)k);
        double lam = std::pow(k * std::numbers::pi / length, 2.0);
        double sigma = std::pow(lam, -s_g / 2.0) * std::pow((double)k, -2.2);
        g[(std::size_t)k - 1] = sigma * rng.uniform_pm1();
        double a = rng.uniform_pm1(), b = rng.uniform_pm1(), c = rng.uniform_pm1();
        double amp = std::pow((double)k, -1.5);
        std::vector<double> row((std::size_t)grid.cells + 1);
        for (int i = 0; i <= grid.cells; ++i) {
            double t = grid.node(i);
            row[(std::size_t)i] = amp * (a + b * (t / T) + c * std::sin(2.0 * std::numbers::pi * t / T));
        }
        rows[(std::size_t)k - 1] = std::move(row);
    }
    return ProblemSpec(FracOrder{alpha}, grid, length, SpectralField(length, std::move(g)),
                       ModeTrajectories(grid, length, std::move(rows)));
}

StabilityStudy stability_study(const std::vector<double>& alphas, double delta, int trials, int modes,
                               const TimeGrid& grid, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("stability_study: need at least one trial");
    StabilityStudy out;
    const double length = std::numbers::pi;
    for (double alpha : alphas) {
        double worst = 0.0;
        for (int trial = 0; trial < trials; ++trial) {
            ProblemSpec p = random_problem(alpha, delta, modes, grid, length, seed, trial);
            double r = stability_ratio(p, delta);
            out.rows.push_back({alpha, trial, r});
            worst = std::max(worst, r);
        }
        out.max_ratio[alpha] = worst;
    }
    return out;
}

std::vector<TraceRow> trace_study(double alpha, double delta, const std::vector<double>& s_list,
                                  const TimeGrid& grid, int modes) {
    if (!(alpha > 0.5) || !(alpha < 1.0))
        throw std::invalid_argument("trace_study: alpha must lie in (1/2, 1)");
    const double s_g = 1.0 - 1.0 / alpha + delta;
    for (double s : s_list)
        if (!(s >= -1.0) || !(s <= 1.0))
            throw std::invalid_argument("trace_study: s values must lie in [-1, 1]");

    const double length = std::numbers::pi;
    std::vector<double> lam((std::size_t)modes), g((std::size_t)modes);
    for (int k = 1; k <= modes; ++k) {
        lam[(std::size_t)k - 1] = std::pow(k * std::numbers::pi / length, 2.0);
        g[(std::size_t)k - 1] = std::sqrt(std::pow(lam[(std::size_t)k - 1], -s_g)
                                          * std::pow((double)k, -1.01));
    }

    // f = 0: the solution coefficients are g_k E_{alpha,1}(-lambda_k t^alpha)
    MLParams p{alpha, 1.0};
    std::vector<std::vector<double>> em((std::size_t)modes,
                                        std::vector<double>((std::size_t)grid.cells + 1, 1.0));
    for (int k = 0; k < modes; ++k)
        for (int i = 1; i <= grid.cells; ++i)
            em[(std::size_t)k][(std::size_t)i] =
                ml(p, -lam[(std::size_t)k] * std::pow(grid.node(i), alpha));

    const double threshold = 1.0 - 1.0 / alpha;
    std::vector<TraceRow> out;
    out.reserve(s_list.size() * (std::size_t)(grid.cells + 1));
    for (double s : s_list) {
        for (int i = 0; i <= grid.cells; ++i) {
            double acc = 0.0;
            for (int k = 0; k < modes; ++k) {
                double diff = g[(std::size_t)k] * (em[(std::size_t)k][(std::size_t)i] - 1.0);
                acc += std::pow(lam[(std::size_t)k], s) * diff * diff;
            }
            out.push_back({s, grid.node(i), std::sqrt(acc), s < threshold});
        }
    }
    return out;
}

}  // namespace subdiff
