#pragma once

// Derivative-free simplex minimizer (Nelder-Mead with the standard
// reflection/expansion/contraction/shrink moves). Deterministic: ordering
// ties break on vertex index, so repeated runs reproduce bit-identically.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

namespace hyperlab {

struct NelderMeadResult {
    std::vector<double> x;
    double fval = 0.0;
    int iterations = 0;
    bool converged = false;
};

template <class F>
NelderMeadResult nelder_mead(F&& fn, const std::vector<double>& start, double step, double ftol,
                             int max_iters) {
    const std::size_t dim = start.size();
    const std::size_t m = dim + 1;
    std::vector<std::vector<double>> simplex(m, start);
    std::vector<double> fv(m);
    for (std::size_t i = 0; i < dim; ++i) {
        simplex[i + 1][i] += step != 0.0 ? step : 1.0;
    }
    for (std::size_t i = 0; i < m; ++i) {
        fv[i] = fn(simplex[i]);
    }
    std::vector<std::size_t> order(m);

    NelderMeadResult result;
    int iter = 0;
    for (; iter < max_iters; ++iter) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second_worst = order[m - 2];

        if (std::abs(fv[worst] - fv[best]) <=
            ftol * (std::abs(fv[best]) + std::abs(fv[worst]) + 1e-300)) {
            result.converged = true;
            break;
        }

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == worst) {
                continue;
            }
            for (std::size_t d = 0; d < dim; ++d) {
                centroid[d] += simplex[i][d];
            }
        }
        for (double& c : centroid) {
            c /= static_cast<double>(dim);
        }

        auto blend = [&](double coeff) {
            std::vector<double> p(dim);
            for (std::size_t d = 0; d < dim; ++d) {
                p[d] = centroid[d] + coeff * (centroid[d] - simplex[worst][d]);
            }
            return p;
        };

        std::vector<double> reflected = blend(1.0);
        const double fr = fn(reflected);
        if (fr < fv[order[0]]) {
            std::vector<double> expanded = blend(2.0);
            const double fe = fn(expanded);
            if (fe < fr) {
                simplex[worst] = std::move(expanded);
                fv[worst] = fe;
            } else {
                simplex[worst] = std::move(reflected);
                fv[worst] = fr;
            }
            continue;
        }
        if (fr < fv[second_worst]) {
            simplex[worst] = std::move(reflected);
            fv[worst] = fr;
            continue;
        }
        std::vector<double> contracted = blend(fr < fv[worst] ? 0.5 : -0.5);
        const double fc = fn(contracted);
        if (fc < std::min(fr, fv[worst])) {
            simplex[worst] = std::move(contracted);
            fv[worst] = fc;
            continue;
        }
        // shrink toward the best vertex
        for (std::size_t i = 0; i < m; ++i) {
            if (i == best) {
                continue;
            }
            for (std::size_t d = 0; d < dim; ++d) {
                simplex[i][d] = simplex[best][d] + 0.5 * (simplex[i][d] - simplex[best][d]);
            }
            fv[i] = fn(simplex[i]);
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < m; ++i) {
        if (fv[i] < fv[best]) {
            best = i;
        }
    }
    result.x = simplex[best];
    result.fval = fv[best];
    result.iterations = iter;
    return result;
}

}  // namespace hyperlab
