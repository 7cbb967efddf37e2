#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "subdiff/spectral_solver.hpp"

namespace subdiff {

/// Deterministic 64-bit generator (splitmix64); identical across platforms,
/// which keeps study output byte-reproducible for a given seed.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// uniform in [-1, 1]
    double uniform_pm1() { return (double)(next() >> 11) * (2.0 / 9007199254740992.0) - 1.0; }
};

/// Seeded random instance with g in H^{1-1/alpha+delta} by construction:
/// g_k = lambda_k^{-s_g/2} k^{-2.2} xi_k and smooth decaying forcing. Modes
/// are drawn independently per (seed, trial, k), so enlarging M extends the
/// same problem instead of redrawing it.
ProblemSpec random_problem(double alpha, double delta, int modes, const TimeGrid& grid, double length,
                           std::uint64_t seed, int trial);

struct StabilityRow {
    double alpha;
    int trial;
    double ratio;
};

struct StabilityStudy {
    std::vector<StabilityRow> rows;
    std::map<double, double> max_ratio;  // per alpha
};

StabilityStudy stability_study(const std::vector<double>& alphas, double delta, int trials, int modes,
                               const TimeGrid& grid, std::uint64_t seed);

struct TraceRow {
    double s;
    double t;
    double value;   // || u(t) - g ||_{H^s}
    bool asserted;  // s < 1 - 1/alpha, where the embedding guarantees decay
};

/// Rough-data trace study: g_k^2 = lambda_k^{-(1-1/alpha+delta)} k^{-1.01}, f = 0.
std::vector<TraceRow> trace_study(double alpha, double delta, const std::vector<double>& s_list,
                                  const TimeGrid& grid, int modes);

}  // namespace subdiff
