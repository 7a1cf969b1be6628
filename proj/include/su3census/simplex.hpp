#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace su3census {

/// Options for the derivative-free simplex descent.  Everything is fixed up
/// front (start point, step, budget, tolerance), so a given objective and
/// configuration always produce the same iterate sequence.
struct SimplexOptions {
    double initial_step = 0.5;
    double tolerance = 1e-12;   // stop when the simplex collapses below this
    int max_iterations = 20000;
    int restarts = 3;           // rebuild the simplex around the incumbent
};

struct SimplexResult {
    std::vector<double> x;
    double value = 0.0;
    bool converged = false;
    int iterations = 0;
};

/// Nelder-Mead downhill simplex with standard coefficients (reflect 1,
/// expand 2, contract 1/2, shrink 1/2).
inline SimplexResult nelder_mead(const std::function<double(std::span<const double>)>& objective,
                                 std::vector<double> start, const SimplexOptions& options = {}) {
    const std::size_t dim = start.size();
    SimplexResult result;
    result.x = start;
    result.value = objective(start);

    int iterations = 0;
    double step = options.initial_step;
    for (int round = 0; round <= options.restarts; ++round, step *= 0.1) {
        std::vector<std::vector<double>> pts(dim + 1, result.x);
        std::vector<double> vals(dim + 1);
        for (std::size_t i = 0; i < dim; ++i) pts[i + 1][i] += step;
        for (std::size_t i = 0; i <= dim; ++i) vals[i] = objective(pts[i]);

        bool collapsed = false;
        while (iterations < options.max_iterations) {
            ++iterations;
            std::vector<std::size_t> order(dim + 1);
            for (std::size_t i = 0; i <= dim; ++i) order[i] = i;
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
            const std::size_t best = order[0], worst = order[dim], second = order[dim - 1];

            double spread = 0.0;
            for (std::size_t i = 0; i < dim; ++i)
                spread = std::max(spread, std::abs(pts[worst][i] - pts[best][i]));
            if (spread < options.tolerance && std::abs(vals[worst] - vals[best]) < options.tolerance) {
                collapsed = true;
                break;
            }

            std::vector<double> centroid(dim, 0.0);
            for (std::size_t i = 0; i <= dim; ++i) {
                if (i == worst) continue;
                for (std::size_t k = 0; k < dim; ++k) centroid[k] += pts[i][k];
            }
            for (double& c : centroid) c /= static_cast<double>(dim);

            auto blend = [&](double coeff) {
                std::vector<double> p(dim);
                for (std::size_t k = 0; k < dim; ++k)
                    p[k] = centroid[k] + coeff * (pts[worst][k] - centroid[k]);
                return p;
            };

            std::vector<double> reflected = blend(-1.0);
            const double fr = objective(reflected);
            if (fr < vals[best]) {
                std::vector<double> expanded = blend(-2.0);
                const double fe = objective(expanded);
                if (fe < fr) {
                    pts[worst] = std::move(expanded);
                    vals[worst] = fe;
                } else {
                    pts[worst] = std::move(reflected);
                    vals[worst] = fr;
                }
                continue;
            }
            if (fr < vals[second]) {
                pts[worst] = std::move(reflected);
                vals[worst] = fr;
                continue;
            }
            std::vector<double> contracted = blend(fr < vals[worst] ? -0.5 : 0.5);
            const double fc = objective(contracted);
            if (fc < std::min(fr, vals[worst])) {
                pts[worst] = std::move(contracted);
                vals[worst] = fc;
                continue;
            }
            for (std::size_t i = 0; i <= dim; ++i) {  // shrink toward the best vertex
                if (i == best) continue;
                for (std::size_t k = 0; k < dim; ++k)
                    pts[i][k] = pts[best][k] + 0.5 * (pts[i][k] - pts[best][k]);
                vals[i] = objective(pts[i]);
            }
        }

        std::size_t best = 0;
        for (std::size_t i = 1; i <= dim; ++i)
            if (vals[i] < vals[best]) best = i;
        if (vals[best] <= result.value) {
            result.x = pts[best];
            result.value = vals[best];
        }
        result.converged = collapsed;
        if (iterations >= options.max_iterations) break;
    }
    result.iterations = iterations;
    return result;
}

}  // namespace su3census
