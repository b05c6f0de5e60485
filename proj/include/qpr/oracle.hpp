#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "qpr/ising.hpp"
#include "qpr/portfolio.hpp"

namespace qpr {

/// Exhaustive classical reference over the full 2^(2N) encoded state space.
/// Deliberately the dumbest possible code: it is the trust anchor for the
/// encoders and the simulator.

inline constexpr int kOracleMaxSpins = 24;

inline void check_enumeration_capacity(int n_spins) {
    if (n_spins < 1 || n_spins > kOracleMaxSpins) {
        throw std::runtime_error("oracle: enumeration capacity is " +
                                 std::to_string(kOracleMaxSpins) + " spins, asked for " +
                                 std::to_string(n_spins));
    }
}

/// Visits every basis index of the 2N-spin encoding in ascending order with
/// its decoded position vector.
template <typename Visitor>
void enumerate_states(int n_assets, Visitor&& visit) {
    check_enumeration_capacity(2 * n_assets);
    const std::uint64_t dim = std::uint64_t{1} << (2 * n_assets);
    std::vector<int> z(static_cast<std::size_t>(n_assets));
    for (std::uint64_t bits = 0; bits < dim; ++bits) {
        for (int i = 0; i < n_assets; ++i) {
            const int x_short = static_cast<int>((bits >> short_spin(i)) & 1u);
            const int x_long = static_cast<int>((bits >> long_spin(i)) & 1u);
            z[static_cast<std::size_t>(i)] = x_long - x_short;
        }
        visit(bits, z);
    }
}

/// Visits every position vector z in {-1, 0, +1}^N, ascending in base-3
/// digit order (z_0 varies fastest).
template <typename Visitor>
void enumerate_positions(int n_assets, Visitor&& visit) {
    check_enumeration_capacity(2 * n_assets);
    std::vector<int> z(static_cast<std::size_t>(n_assets), -1);
    while (true) {
        visit(z);
        int i = 0;
        while (i < n_assets && z[static_cast<std::size_t>(i)] == 1) {
            z[static_cast<std::size_t>(i)] = -1;
            ++i;
        }
        if (i == n_assets) break;
        ++z[static_cast<std::size_t>(i)];
    }
}

/// Number of encoded bit states whose decoded positions net to exactly D.
std::uint64_t feasible_count(int n_assets, int net_lots);

struct ModelExtrema {
    double min = 0.0;
    double max = 0.0;
    std::uint64_t argmin_bits = 0;
    std::uint64_t argmax_bits = 0;
};

/// Exact global extrema by full scan; argmin/argmax ties go to the lowest
/// basis index.
ModelExtrema extrema(const IsingModel& model);

/// Mean of the model over all basis states under the uniform distribution.
double uniform_mean(const IsingModel& model);

struct FeasiblePortfolio {
    std::vector<int> positions;
    double expected_return = 0.0;
    double risk = 0.0;
    double variance = 0.0;
};

/// Every distinct feasible position vector with its return/risk coordinates.
std::vector<FeasiblePortfolio> feasible_cloud(const PortfolioProblem& problem);

struct FrontierPoint {
    double lambda = 0.0;
    std::vector<int> positions;
    double expected_return = 0.0;
    double risk = 0.0;
};

/// For each lambda, the feasible z minimizing the risk-return objective;
/// consecutive duplicates collapsed (the first lambda is kept).
std::vector<FrontierPoint> efficient_frontier(const PortfolioProblem& problem,
                                              std::span<const double> lambda_grid);

struct CumulativePoint {
    double cost = 0.0;
    double cumulative = 0.0;
};

/// Uniform-weight cumulative cost distribution over all encoded states, or
/// over the feasible subset only. One point per state, sorted by cost then
/// basis index; the last cumulative value is 1.
std::vector<CumulativePoint> baseline_cumulative(const IsingModel& model, bool restrict_feasible,
                                                 const PortfolioProblem& problem);

}  // namespace qpr
