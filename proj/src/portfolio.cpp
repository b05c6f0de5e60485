#include "qpr/portfolio.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qpr {

namespace {

std::uint64_t short_mask(int n_assets) {
    const std::uint64_t all = (std::uint64_t{1} << (2 * n_assets)) - 1;
    return 0x5555555555555555ull & all;
}

std::uint64_t long_mask(int n_assets) {
    const std::uint64_t all = (std::uint64_t{1} << (2 * n_assets)) - 1;
    return 0xAAAAAAAAAAAAAAAAull & all;
}

}  // namespace

void PortfolioProblem::validate() const {
    if (n_assets < 1) {
        throw std::invalid_argument("PortfolioProblem: need at least one asset");
    }
    if (std::abs(net_lots) > n_assets) {
        throw std::invalid_argument("PortfolioProblem: |D| cannot exceed the asset count");
    }
    if (risk_weight < 0.0 || risk_weight > 1.0) {
        throw std::invalid_argument("PortfolioProblem: lambda must lie in [0, 1]");
    }
    if (trade_cost < 0.0) {
        throw std::invalid_argument("PortfolioProblem: trading cost must be non-negative");
    }
    const auto n = static_cast<std::size_t>(n_assets);
    if (mean_returns.size() != n) {
        throw std::invalid_argument("PortfolioProblem: mu length must equal N");
    }
    if (covariance.size() != n) {
        throw std::invalid_argument("PortfolioProblem: sigma must be N x N");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (covariance[i].size() != n) {
            throw std::invalid_argument("PortfolioProblem: sigma must be N x N");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(covariance[i][j] - covariance[j][i]) > 1e-12) {
                throw std::invalid_argument("PortfolioProblem: sigma must be symmetric");
            }
        }
    }
    if (previous_positions.size() != n) {
        throw std::invalid_argument("PortfolioProblem: y length must equal N");
    }
    for (const int y : previous_positions) {
        if (y < -1 || y > 1) {
            throw std::invalid_argument("PortfolioProblem: y entries must be -1, 0 or +1");
        }
    }
}

std::vector<int> decode_positions(std::uint64_t bits, int n_assets) {
    std::vector<int> z(static_cast<std::size_t>(n_assets));
    for (int i = 0; i < n_assets; ++i) {
        const int x_short = static_cast<int>((bits >> short_spin(i)) & 1u);
        const int x_long = static_cast<int>((bits >> long_spin(i)) & 1u);
        z[static_cast<std::size_t>(i)] = x_long - x_short;
    }
    return z;
}

int net_position(std::uint64_t bits, int n_assets) {
    return std::popcount(bits & long_mask(n_assets)) - std::popcount(bits & short_mask(n_assets));
}

bool is_feasible(std::uint64_t bits, int n_assets, int net_lots) {
    return net_position(bits, n_assets) == net_lots;
}

std::vector<int> spins_of_basis(std::uint64_t bits, int n_spins) {
    std::vector<int> spins(static_cast<std::size_t>(n_spins));
    for (int k = 0; k < n_spins; ++k) {
        spins[static_cast<std::size_t>(k)] = ((bits >> k) & 1u) ? 1 : -1;
    }
    return spins;
}

IsingModel encode_risk_return(const PortfolioProblem& problem) {
    problem.validate();
    const int n = problem.n_assets;
    IsingBuilder builder(static_cast<std::uint32_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double w = problem.risk_weight * problem.covariance[i][j] / 4.0;
            if (w == 0.0) continue;
            const auto li = static_cast<std::uint32_t>(long_spin(i));
            const auto lj = static_cast<std::uint32_t>(long_spin(j));
            const auto si = static_cast<std::uint32_t>(short_spin(i));
            const auto sj = static_cast<std::uint32_t>(short_spin(j));
            builder.add_quadratic(li, lj, w);
            builder.add_quadratic(li, sj, -w);
            builder.add_quadratic(si, lj, -w);
            builder.add_quadratic(si, sj, w);
        }
        const double m = (1.0 - problem.risk_weight) * problem.mean_returns[i] / 2.0;
        builder.add_linear(static_cast<std::uint32_t>(long_spin(i)), -m);
        builder.add_linear(static_cast<std::uint32_t>(short_spin(i)), +m);
    }
    return builder.build();
}

IsingModel encode_trading_cost(const PortfolioProblem& problem) {
    problem.validate();
    const int n = problem.n_assets;
    IsingBuilder builder(static_cast<std::uint32_t>(2 * n));
    const double q = problem.trade_cost / 4.0;
    for (int i = 0; i < n; ++i) {
        const double y = problem.previous_positions[static_cast<std::size_t>(i)];
        builder.add_constant(3.0 * q);
        builder.add_linear(static_cast<std::uint32_t>(long_spin(i)), q * (1.0 - y * y - y));
        builder.add_linear(static_cast<std::uint32_t>(short_spin(i)), q * (1.0 - y * y + y));
        builder.add_quadratic(static_cast<std::uint32_t>(short_spin(i)),
                              static_cast<std::uint32_t>(long_spin(i)), q * (2.0 * y * y - 1.0));
    }
    return builder.build();
}

IsingModel encode_penalty(const PortfolioProblem& problem) {
    problem.validate();
    if (problem.penalty_scale <= 0.0) {
        throw std::invalid_argument("encode_penalty: penalty coefficient A must be positive");
    }
    const int n = problem.n_assets;
    const double a = problem.penalty_scale;
    const double d = problem.net_lots;
    IsingBuilder builder(static_cast<std::uint32_t>(2 * n));
    const double w = a / 4.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const auto li = static_cast<std::uint32_t>(long_spin(i));
            const auto lj = static_cast<std::uint32_t>(long_spin(j));
            const auto si = static_cast<std::uint32_t>(short_spin(i));
            const auto sj = static_cast<std::uint32_t>(short_spin(j));
            builder.add_quadratic(li, lj, w);
            builder.add_quadratic(li, sj, -w);
            builder.add_quadratic(si, lj, -w);
            builder.add_quadratic(si, sj, w);
        }
        builder.add_linear(static_cast<std::uint32_t>(long_spin(i)), -a * d);
        builder.add_linear(static_cast<std::uint32_t>(short_spin(i)), +a * d);
    }
    builder.add_constant(a * d * d);
    return builder.build();
}

IsingModel build_soft(const PortfolioProblem& problem) {
    const IsingModel rr = encode_risk_return(problem);
    const IsingModel tc = encode_trading_cost(problem);
    const IsingModel penalty = encode_penalty(problem);
    return add_scaled(add_scaled(rr, tc, 1.0), penalty, 1.0);
}

IsingModel build_hard(const PortfolioProblem& problem) {
    return add_scaled(encode_risk_return(problem), encode_trading_cost(problem), 1.0);
}

double compute_penalty_coefficient(double oracle_min, double oracle_max) {
    if (oracle_max < oracle_min) {
        throw std::invalid_argument("compute_penalty_coefficient: max must be >= min");
    }
    const double spread = oracle_max - oracle_min;
    if (spread <= 0.0) {
        return 1e-6;
    }
    const double v = spread * 1.01;
    const double scale = std::pow(10.0, std::floor(std::log10(v)) - 1.0);
    return std::ceil(v / scale) * scale;
}

PositionMetrics metrics(std::span<const int> positions, const PortfolioProblem& problem) {
    problem.validate();
    if (positions.size() != static_cast<std::size_t>(problem.n_assets)) {
        throw std::invalid_argument("metrics: position vector length must equal N");
    }
    for (const int z : positions) {
        if (z < -1 || z > 1) {
            throw std::invalid_argument("metrics: positions must be -1, 0 or +1");
        }
    }
    PositionMetrics out;
    double variance = 0.0;
    for (int i = 0; i < problem.n_assets; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        out.expected_return += problem.mean_returns[ui] * positions[ui];
        for (int j = 0; j < problem.n_assets; ++j) {
            const auto uj = static_cast<std::size_t>(j);
            variance += problem.covariance[ui][uj] * positions[ui] * positions[uj];
        }
        if (positions[ui] != problem.previous_positions[ui]) {
            out.trading_cost += problem.trade_cost;
        }
        out.trade_count += std::abs(positions[ui] - problem.previous_positions[ui]);
    }
    out.risk = std::sqrt(std::max(variance, 0.0));
    return out;
}

std::pair<std::vector<double>, std::vector<std::vector<double>>> annualize(
    std::span<const double> mu_daily, const std::vector<std::vector<double>>& sigma_daily) {
    constexpr double kTradingDays = 250.0;
    std::vector<double> mu(mu_daily.begin(), mu_daily.end());
    for (double& m : mu) m *= kTradingDays;
    auto sigma = sigma_daily;
    for (auto& row : sigma) {
        for (double& v : row) v *= kTradingDays;
    }
    return {std::move(mu), std::move(sigma)};
}

PortfolioProblem annualized(const PortfolioProblem& problem) {
    PortfolioProblem out = problem;
    auto [mu, sigma] = annualize(problem.mean_returns, problem.covariance);
    out.mean_returns = std::move(mu);
    out.covariance = std::move(sigma);
    return out;
}

void to_json(nlohmann::json& j, const PortfolioProblem& problem) {
    j = nlohmann::json{{"N", problem.n_assets},
                       {"D", problem.net_lots},
                       {"lambda", problem.risk_weight},
                       {"T", problem.trade_cost},
                       {"A", problem.penalty_scale},
                       {"mu", problem.mean_returns},
                       {"sigma", problem.covariance},
                       {"y", problem.previous_positions}};
}

void from_json(const nlohmann::json& j, PortfolioProblem& problem) {
    problem.n_assets = j.at("N").get<int>();
    problem.net_lots = j.at("D").get<int>();
    problem.risk_weight = j.at("lambda").get<double>();
    problem.trade_cost = j.at("T").get<double>();
    problem.penalty_scale = j.at("A").get<double>();
    problem.mean_returns = j.at("mu").get<std::vector<double>>();
    problem.covariance = j.at("sigma").get<std::vector<std::vector<double>>>();
    problem.previous_positions = j.at("y").get<std::vector<int>>();
    problem.validate();
}

}  // namespace qpr
