#include "ttensor/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ttensor {

std::vector<std::size_t> optimal_assignment(const RealMatrix& cost) {
    if (cost.rows() != cost.cols()) throw DimensionMismatch("optimal_assignment: cost matrix must be square");
    const std::size_t n = static_cast<std::size_t>(cost.rows());
    if (n == 0) return {};
    const double inf = std::numeric_limits<double>::infinity();

    // 1-based potentials u (rows), v (columns); match[j] = row assigned to column j.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        match[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const std::size_t i0 = match[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost(static_cast<Eigen::Index>(i0 - 1), static_cast<Eigen::Index>(j - 1)) -
                                   u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<std::size_t> assignment(n);
    for (std::size_t j = 1; j <= n; ++j) assignment[match[j] - 1] = j - 1;
    return assignment;
}

SpectrumMatch match_spectra(const std::vector<Complex>& first, const std::vector<Complex>& second) {
    if (first.size() != second.size()) {
        throw DimensionMismatch("match_spectra: " + std::to_string(first.size()) + " vs " +
                                std::to_string(second.size()) + " values");
    }
    const Eigen::Index n = static_cast<Eigen::Index>(first.size());
    RealMatrix cost(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            cost(i, j) = std::norm(first[static_cast<std::size_t>(i)] - second[static_cast<std::size_t>(j)]);

    SpectrumMatch out;
    out.permutation = optimal_assignment(cost);
    double sum = 0.0;
    for (std::size_t i = 0; i < first.size(); ++i) {
        const double d = std::abs(first[i] - second[out.permutation[i]]);
        sum += d * d;
        out.max_distance = std::max(out.max_distance, d);
    }
    out.l2_distance = std::sqrt(sum);
    return out;
}

}  // namespace ttensor
