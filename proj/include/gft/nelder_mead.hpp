#pragma once

// Derivative-free simplex maximization (Nelder-Mead) over R^n.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace gft {

struct SimplexResult {
    std::vector<double> x;
    double value;
    std::size_t iterations;
};

/// Maximizes `objective` starting from `x0` with per-coordinate initial
/// steps. Standard coefficients: reflect 1, expand 2, contract 1/2, shrink 1/2.
/// Never returns a point worse than x0.
template <class Objective>
SimplexResult nelder_mead_maximize(Objective&& objective, std::vector<double> x0, const std::vector<double>& step,
                                   std::size_t max_iterations, double ftol = 1e-15) {
    const std::size_t n = x0.size();
    struct Vertex {
        std::vector<double> x;
        double f;
    };
    std::vector<Vertex> simplex;
    simplex.reserve(n + 1);
    simplex.push_back({x0, objective(x0)});
    for (std::size_t i = 0; i < n; ++i) {
        auto x = x0;
        x[i] += step[i];
        simplex.push_back({x, objective(x)});
    }

    const auto order = [&] {
        std::stable_sort(simplex.begin(), simplex.end(), [](const Vertex& a, const Vertex& b) { return a.f > b.f; });
    };
    const auto towards = [n](const std::vector<double>& from, const std::vector<double>& to, double t) {
        std::vector<double> r(n);
        for (std::size_t i = 0; i < n; ++i) r[i] = from[i] + t * (to[i] - from[i]);
        return r;
    };

    std::size_t it = 0;
    for (; it < max_iterations; ++it) {
        order();
        if (simplex.front().f - simplex.back().f <= ftol) break;

        std::vector<double> centroid(n, 0.0);
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[v].x[i] / static_cast<double>(n);

        auto& worst = simplex.back();
        const auto xr = towards(centroid, worst.x, -1.0);
        const double fr = objective(xr);
        if (fr > simplex.front().f) {
            const auto xe = towards(centroid, worst.x, -2.0);
            const double fe = objective(xe);
            worst = fe > fr ? Vertex{xe, fe} : Vertex{xr, fr};
            continue;
        }
        if (fr > simplex[n - 1].f) {
            worst = {xr, fr};
            continue;
        }
        // contraction, outside if the reflection beat the worst vertex
        const bool outside = fr > worst.f;
        const auto xc = outside ? towards(centroid, xr, 0.5) : towards(centroid, worst.x, 0.5);
        const double fc = objective(xc);
        if (fc > std::max(outside ? fr : worst.f, worst.f)) {
            worst = {xc, fc};
            continue;
        }
        for (std::size_t v = 1; v <= n; ++v) {
            simplex[v].x = towards(simplex.front().x, simplex[v].x, 0.5);
            simplex[v].f = objective(simplex[v].x);
        }
    }
    order();
    return {simplex.front().x, simplex.front().f, it};
}

} // namespace gft
