#pragma once

#include <cmath>
#include <concepts>
#include <stdexcept>
#include <vector>

namespace subdiff {

/// Fractional order carrier; admissible range is checked by each operation.
struct FracOrder {
    double value{};
};

/// Uniform partition of J = (0, T) into `cells` intervals.
struct TimeGrid {
    double horizon{};
    int cells{};

    TimeGrid(double T, int n) : horizon(T), cells(n) {
        if (!(T > 0.0) || !std::isfinite(T)) throw std::invalid_argument("TimeGrid: T must be positive");
        if (n < 2) throw std::invalid_argument("TimeGrid: need at least 2 cells");
    }

    double tau() const { return horizon / cells; }
    double node(int i) const { return i * tau(); }
    int node_count() const { return cells + 1; }

    bool operator==(const TimeGrid& o) const { return horizon == o.horizon && cells == o.cells; }
};

/// Real-valued samples on the nodes of a TimeGrid.
struct GridFunction {
    TimeGrid grid;
    std::vector<double> values;  // size cells + 1

    explicit GridFunction(const TimeGrid& g) : grid(g), values((std::size_t)g.cells + 1, 0.0) {}

    GridFunction(const TimeGrid& g, std::vector<double> v) : grid(g), values(std::move(v)) {
        if (values.size() != (std::size_t)grid.cells + 1)
            throw std::invalid_argument("GridFunction: value count must equal node count");
        for (double x : values)
            if (!std::isfinite(x)) throw std::invalid_argument("GridFunction: values must be finite");
    }

    template <std::invocable<double> F>
    static GridFunction sample(const TimeGrid& g, F&& f) {
        GridFunction out(g);
        for (int i = 0; i <= g.cells; ++i) out.values[(std::size_t)i] = f(g.node(i));
        return out;
    }

    double& operator[](int i) { return values[(std::size_t)i]; }
    double operator[](int i) const { return values[(std::size_t)i]; }
    int size() const { return (int)values.size(); }
};

}  // namespace subdiff
