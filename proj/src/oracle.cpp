#include "qpr/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace qpr {

std::uint64_t feasible_count(int n_assets, int net_lots) {
    std::uint64_t count = 0;
    enumerate_states(n_assets, [&](std::uint64_t bits, const std::vector<int>&) {
        if (is_feasible(bits, n_assets, net_lots)) ++count;
    });
    return count;
}

ModelExtrema extrema(const IsingModel& model) {
    const int n = static_cast<int>(model.n_spins());
    check_enumeration_capacity(n);
    const std::uint64_t dim = std::uint64_t{1} << n;
    ModelExtrema out;
    std::vector<int> spins(static_cast<std::size_t>(n));
    for (std::uint64_t bits = 0; bits < dim; ++bits) {
        for (int k = 0; k < n; ++k) {
            spins[static_cast<std::size_t>(k)] = ((bits >> k) & 1u) ? 1 : -1;
        }
        const double value = model.evaluate(spins);
        if (bits == 0 || value < out.min) {
            out.min = value;
            out.argmin_bits = bits;
        }
        if (bits == 0 || value > out.max) {
            out.max = value;
            out.argmax_bits = bits;
        }
    }
    return out;
}

double uniform_mean(const IsingModel& model) {
    const int n = static_cast<int>(model.n_spins());
    check_enumeration_capacity(n);
    const std::uint64_t dim = std::uint64_t{1} << n;
    std::vector<int> spins(static_cast<std::size_t>(n));
    double acc = 0.0;
    for (std::uint64_t bits = 0; bits < dim; ++bits) {
        for (int k = 0; k < n; ++k) {
            spins[static_cast<std::size_t>(k)] = ((bits >> k) & 1u) ? 1 : -1;
        }
        acc += model.evaluate(spins);
    }
    return acc / static_cast<double>(dim);
}

std::vector<FeasiblePortfolio> feasible_cloud(const PortfolioProblem& problem) {
    problem.validate();
    std::vector<FeasiblePortfolio> cloud;
    enumerate_positions(problem.n_assets, [&](const std::vector<int>& z) {
        const int net = std::accumulate(z.begin(), z.end(), 0);
        if (net != problem.net_lots) return;
        FeasiblePortfolio point;
        point.positions = z;
        for (int i = 0; i < problem.n_assets; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            point.expected_return += problem.mean_returns[ui] * z[ui];
            for (int j = 0; j < problem.n_assets; ++j) {
                const auto uj = static_cast<std::size_t>(j);
                point.variance += problem.covariance[ui][uj] * z[ui] * z[uj];
            }
        }
        point.risk = std::sqrt(std::max(point.variance, 0.0));
        cloud.push_back(std::move(point));
    });
    return cloud;
}

std::vector<FrontierPoint> efficient_frontier(const PortfolioProblem& problem,
                                              std::span<const double> lambda_grid) {
    if (lambda_grid.empty()) {
        throw std::invalid_argument("efficient_frontier: lambda grid must be non-empty");
    }
    const auto cloud = feasible_cloud(problem);
    std::vector<FrontierPoint> frontier;
    for (const double lambda : lambda_grid) {
        std::size_t best = 0;
        double best_cost = 0.0;
        for (std::size_t k = 0; k < cloud.size(); ++k) {
            const double cost =
                lambda * cloud[k].variance - (1.0 - lambda) * cloud[k].expected_return;
            if (k == 0 || cost < best_cost) {
                best = k;
                best_cost = cost;
            }
        }
        if (!frontier.empty() && frontier.back().positions == cloud[best].positions) {
            continue;  // same portfolio as the previous lambda
        }
        frontier.push_back(
            {lambda, cloud[best].positions, cloud[best].expected_return, cloud[best].risk});
    }
    return frontier;
}

std::vector<CumulativePoint> baseline_cumulative(const IsingModel& model, bool restrict_feasible,
                                                 const PortfolioProblem& problem) {
    problem.validate();
    if (model.n_spins() != static_cast<std::uint32_t>(2 * problem.n_assets)) {
        throw std::invalid_argument("baseline_cumulative: model must cover 2N spins");
    }
    std::vector<std::pair<double, std::uint64_t>> rows;
    const int n = 2 * problem.n_assets;
    std::vector<int> spins(static_cast<std::size_t>(n));
    enumerate_states(problem.n_assets, [&](std::uint64_t bits, const std::vector<int>&) {
        if (restrict_feasible && !is_feasible(bits, problem.n_assets, problem.net_lots)) return;
        for (int k = 0; k < n; ++k) {
            spins[static_cast<std::size_t>(k)] = ((bits >> k) & 1u) ? 1 : -1;
        }
        rows.emplace_back(model.evaluate(spins), bits);
    });
    std::sort(rows.begin(), rows.end());
    std::vector<CumulativePoint> curve(rows.size());
    const double total = static_cast<double>(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        curve[k] = {rows[k].first, static_cast<double>(k + 1) / total};
    }
    return curve;
}

}  // namespace qpr
