#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qpr/ising.hpp"

namespace qpr {

/// One-period discrete rebalancing instance. Each asset takes a position in
/// {-1, 0, +1} (short / flat / long); the portfolio must net to `net_lots`
/// held lots.
struct PortfolioProblem {
    int n_assets = 0;                          // N
    int net_lots = 0;                          // D
    double risk_weight = 0.5;                  // lambda: 1 favors low risk, 0 high return
    double trade_cost = 0.0;                   // T, charged once per traded asset
    std::vector<double> mean_returns;          // mu, length N
    std::vector<std::vector<double>> covariance;  // sigma, N x N symmetric
    std::vector<int> previous_positions;       // y, entries in {-1, 0, +1}
    double penalty_scale = 0.0;                // A, required > 0 for the soft form

    void validate() const;
};

/// Each asset maps to a (short, long) qubit pair.
constexpr int short_spin(int asset) { return 2 * asset; }
constexpr int long_spin(int asset) { return 2 * asset + 1; }

/// Position decoded from the two decision bits: z = x_long - x_short, so
/// (0,0) -> 0, (0,1) -> +1, (1,0) -> -1 and (1,1) -> 0 (netted long+short,
/// penalized by the trading-cost encoding).
std::vector<int> decode_positions(std::uint64_t bits, int n_assets);

/// Net position sum of the decoded state: popcount(long bits) - popcount(short bits).
int net_position(std::uint64_t bits, int n_assets);

/// True when the decoded state nets to exactly `net_lots`.
bool is_feasible(std::uint64_t bits, int n_assets, int net_lots);

/// Spin vector for a basis index under the bit -> spin map s = 2x - 1.
std::vector<int> spins_of_basis(std::uint64_t bits, int n_spins);

/// Markowitz risk-return cost over the 2N spins:
/// lambda * sum_ij sigma_ij/4 * (s+s+ - s+s- - s-s+ + s-s-)
/// - (1-lambda) * sum_i mu_i/2 * (s+ - s-).
IsingModel encode_risk_return(const PortfolioProblem& problem);

/// Fixed per-asset trading cost, unconditional coefficient form:
/// T/4 * (3 + (1-y^2-y) s+ + (1-y^2+y) s- + (2y^2-1) s+ s-) summed over assets.
/// The degenerate (1,1) encoding always pays T.
IsingModel encode_trading_cost(const PortfolioProblem& problem);

/// Quadratic net-investment penalty A * (sum_i z_i - D)^2 expanded in spins.
IsingModel encode_penalty(const PortfolioProblem& problem);

/// Soft formulation: risk-return + trading cost + penalty. Requires A > 0.
IsingModel build_soft(const PortfolioProblem& problem);

/// Hard formulation: risk-return + trading cost only; the constraint is
/// enforced by the mixer, not the cost.
IsingModel build_hard(const PortfolioProblem& problem);

/// Penalty coefficient from the unconstrained cost extrema: strictly greater
/// than max - min, fixed as (max - min) * 1.01 rounded up to two significant
/// figures. Degenerate (max == min) instances get a 1e-6 floor.
double compute_penalty_coefficient(double oracle_min, double oracle_max);

struct PositionMetrics {
    double expected_return = 0.0;  // mu . z
    double risk = 0.0;             // sqrt(z' sigma z)
    double trading_cost = 0.0;     // T * #{i : z_i != y_i}
    int trade_count = 0;           // sum |z_i - y_i|; a full reversal counts as 2
};

PositionMetrics metrics(std::span<const int> positions, const PortfolioProblem& problem);

/// Daily -> annualized statistics: both mu and sigma scaled by 250.
std::pair<std::vector<double>, std::vector<std::vector<double>>> annualize(
    std::span<const double> mu_daily, const std::vector<std::vector<double>>& sigma_daily);

/// Copy of the problem with annualized mu and sigma.
PortfolioProblem annualized(const PortfolioProblem& problem);

/// JSON schema: {"N", "D", "lambda", "T", "A", "mu", "sigma", "y"}.
void to_json(nlohmann::json& j, const PortfolioProblem& problem);
void from_json(const nlohmann::json& j, PortfolioProblem& problem);

}  // namespace qpr
