#include "qpr/qaoa.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qpr {

void QaoaParams::validate() const {
    if (beta.size() != gamma.size()) {
        throw std::invalid_argument("QaoaParams: beta and gamma must have equal length");
    }
    for (const double b : beta) {
        if (!(b >= 0.0 && b <= std::numbers::pi)) {
            throw std::invalid_argument("QaoaParams: beta angles must lie in [0, pi]");
        }
    }
    for (const double g : gamma) {
        if (!(g >= 0.0 && g <= 2.0 * std::numbers::pi)) {
            throw std::invalid_argument("QaoaParams: gamma angles must lie in [0, 2*pi]");
        }
    }
}

QaoaParams QaoaParams::from_flat(std::span<const double> flat) {
    if (flat.size() % 2 != 0) {
        throw std::invalid_argument("QaoaParams::from_flat: expected an even-length vector");
    }
    const std::size_t p = flat.size() / 2;
    QaoaParams params;
    params.beta.assign(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(p));
    params.gamma.assign(flat.begin() + static_cast<std::ptrdiff_t>(p), flat.end());
    return params;
}

std::vector<double> QaoaParams::to_flat() const {
    std::vector<double> flat(beta);
    flat.insert(flat.end(), gamma.begin(), gamma.end());
    return flat;
}

std::vector<double> diagonal_spin_table(const IsingModel& model) {
    const std::uint32_t n = model.n_spins();
    const std::uint64_t dim = std::uint64_t{1} << n;
    std::vector<double> table(dim, 0.0);
    for (std::uint32_t i = 0; i < n; ++i) {
        const double h = model.bias(i);
        if (h == 0.0) continue;
        for (std::uint64_t x = 0; x < dim; ++x) {
            table[x] += ((x >> i) & 1u) ? h : -h;
        }
    }
    for (const CouplingEntry& entry : model.coupling_entries()) {
        for (std::uint64_t x = 0; x < dim; ++x) {
            const bool equal = (((x >> entry.i) ^ (x >> entry.j)) & 1u) == 0;
            table[x] += equal ? entry.value : -entry.value;
        }
    }
    return table;
}

void apply_phase_table(StateVector& state, std::span<const double> table, double gamma) {
    if (table.size() != state.dimension()) {
        throw std::invalid_argument("apply_phase_table: table size must match state dimension");
    }
    auto amps = state.amplitudes();
    const std::uint64_t dim = state.dimension();
    for (std::uint64_t x = 0; x < dim; ++x) {
        const double angle = -gamma * table[x];
        amps[x] *= complex_t{std::cos(angle), std::sin(angle)};
    }
}

void cost_layer(StateVector& state, const IsingModel& model, double gamma) {
    if (model.n_spins() != static_cast<std::uint32_t>(state.n_qubits())) {
        throw std::invalid_argument("cost_layer: model spin count must match the qubit count");
    }
    apply_phase_table(state, diagonal_spin_table(model), gamma);
}

void x_mixer_layer(StateVector& state, double beta) {
    for (int q = 0; q < state.n_qubits(); ++q) {
        state.apply_exp_x(q, beta);
    }
}

std::vector<std::pair<int, int>> parity_ring_pairs(int ring_size) {
    if (ring_size < 2) {
        throw std::invalid_argument("parity_ring_pairs: ring needs at least 2 members");
    }
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a + 1 <= ring_size; a += 2) {
        pairs.emplace_back(a - 1, a);
    }
    for (int a = 2; a <= ring_size; a += 2) {
        pairs.emplace_back(a - 1, a % ring_size);
    }
    if (ring_size % 2 == 1) {
        pairs.emplace_back(ring_size - 1, 0);
    }
    return pairs;
}

void parity_mixer_layer(StateVector& state, std::span<const int> register_qubits, double beta) {
    for (std::size_t i = 0; i < register_qubits.size(); ++i) {
        for (std::size_t j = i + 1; j < register_qubits.size(); ++j) {
            if (register_qubits[i] == register_qubits[j]) {
                throw std::invalid_argument("parity_mixer_layer: register indices must be distinct");
            }
        }
    }
    const auto pairs = parity_ring_pairs(static_cast<int>(register_qubits.size()));
    for (const auto& [u, v] : pairs) {
        state.apply_exp_xxyy(register_qubits[static_cast<std::size_t>(u)],
                             register_qubits[static_cast<std::size_t>(v)], beta);
    }
}

namespace {

void fill_hard_constrained(StateVector& state, int n_assets, int net_lots) {
    auto amps = state.amplitudes();
    std::ranges::fill(amps, complex_t{0.0, 0.0});
    const int n_bell = n_assets - net_lots;
    const double amp = std::pow(2.0, -0.5 * n_bell);
    std::uint64_t base = 0;
    for (int i = 0; i < net_lots; ++i) {
        base |= std::uint64_t{1} << long_spin(i);
    }
    const std::uint64_t branches = std::uint64_t{1} << n_bell;
    for (std::uint64_t m = 0; m < branches; ++m) {
        std::uint64_t idx = base;
        for (int t = 0; t < n_bell; ++t) {
            if ((m >> t) & 1u) {
                idx |= std::uint64_t{0b11} << short_spin(net_lots + t);
            }
        }
        amps[idx] = complex_t{amp, 0.0};
    }
}

}  // namespace

StateVector init_hard_constrained(int n_assets, int net_lots) {
    if (net_lots < 0 || net_lots > n_assets) {
        throw std::invalid_argument("init_hard_constrained: D must satisfy 0 <= D <= N");
    }
    StateVector state(2 * n_assets);
    fill_hard_constrained(state, n_assets, net_lots);
    return state;
}

QaoaEngine::QaoaEngine(const PortfolioProblem& problem, const IsingModel& model, Variant variant)
    : problem_(problem),
      variant_(variant),
      constant_(model.constant()),
      workspace_(2 * problem.n_assets) {
    problem_.validate();
    if (model.n_spins() != static_cast<std::uint32_t>(2 * problem_.n_assets)) {
        throw std::invalid_argument("QaoaEngine: model must cover 2N spins");
    }
    if (variant_ == Variant::hard) {
        if (problem_.net_lots < 0 || problem_.net_lots > problem_.n_assets) {
            throw std::invalid_argument("QaoaEngine: hard variant needs 0 <= D <= N");
        }
        if (problem_.n_assets < 2) {
            throw std::invalid_argument(
                "QaoaEngine: hard variant needs registers of at least 2 qubits");
        }
        for (int i = 0; i < problem_.n_assets; ++i) {
            long_register_.push_back(long_spin(i));
            short_register_.push_back(short_spin(i));
        }
    }
    spin_table_ = diagonal_spin_table(model);
    costs_.resize(spin_table_.size());
    for (std::size_t x = 0; x < spin_table_.size(); ++x) {
        costs_[x] = constant_ + spin_table_[x];
    }
}

void QaoaEngine::prepare(StateVector& state) const {
    if (variant_ == Variant::soft) {
        const double amp = std::pow(2.0, -0.5 * state.n_qubits());
        std::ranges::fill(state.amplitudes(), complex_t{amp, 0.0});
    } else {
        fill_hard_constrained(state, problem_.n_assets, problem_.net_lots);
    }
}

void QaoaEngine::evolve(StateVector& state, const QaoaParams& params) const {
    params.validate();
    for (int layer = 0; layer < params.depth(); ++layer) {
        const auto k = static_cast<std::size_t>(layer);
        apply_phase_table(state, spin_table_, params.gamma[k]);
        if (variant_ == Variant::soft) {
            x_mixer_layer(state, params.beta[k]);
        } else {
            parity_mixer_layer(state, long_register_, params.beta[k]);
            parity_mixer_layer(state, short_register_, params.beta[k]);
        }
    }
}

double QaoaEngine::expectation(const QaoaParams& params) {
    prepare(workspace_);
    evolve(workspace_, params);
    const auto amps = workspace_.amplitudes();
    double acc = 0.0;
    for (std::size_t x = 0; x < amps.size(); ++x) {
        acc += std::norm(amps[x]) * spin_table_[x];
    }
    return acc + constant_;
}

RunResult QaoaEngine::run(const QaoaParams& params) {
    prepare(workspace_);
    evolve(workspace_, params);
    RunResult result{workspace_, 0.0, workspace_.probabilities(), costs_, 0};
    double acc = 0.0;
    for (std::size_t x = 0; x < result.distribution.size(); ++x) {
        acc += result.distribution[x] * spin_table_[x];
    }
    result.expectation = acc + constant_;
    result.selected_bits = select_solution(result, [](std::uint64_t) { return true; });
    return result;
}

RunResult run_soft(const PortfolioProblem& problem, const QaoaParams& params,
                   const IsingModel& model_soft) {
    QaoaEngine engine(problem, model_soft, Variant::soft);
    return engine.run(params);
}

RunResult run_hard(const PortfolioProblem& problem, const QaoaParams& params,
                   const IsingModel& model_hard) {
    QaoaEngine engine(problem, model_hard, Variant::hard);
    return engine.run(params);
}

std::uint64_t select_solution(const RunResult& result,
                              const std::function<bool(std::uint64_t)>& feasibility_filter) {
    constexpr double kMinProbability = 1e-12;
    constexpr double kTieWindow = 1e-12;
    bool found = false;
    std::uint64_t best = 0;
    double best_prob = 0.0;
    for (std::uint64_t x = 0; x < result.distribution.size(); ++x) {
        const double p = result.distribution[x];
        if (p <= kMinProbability || !feasibility_filter(x)) continue;
        if (!found || p > best_prob + kTieWindow) {
            found = true;
            best = x;
            best_prob = p;
        } else if (p >= best_prob - kTieWindow && result.costs[x] < result.costs[best]) {
            best = x;
            best_prob = std::max(best_prob, p);
        }
    }
    if (!found) {
        throw std::runtime_error(
            "select_solution: no accepted basis state with probability above threshold");
    }
    return best;
}

}  // namespace qpr
