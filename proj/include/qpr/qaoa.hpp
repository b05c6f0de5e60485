#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "qpr/ising.hpp"
#include "qpr/portfolio.hpp"
#include "qpr/statevector.hpp"

namespace qpr {

/// Angle schedule for a depth-p circuit: beta_k in [0, pi], gamma_k in [0, 2*pi].
struct QaoaParams {
    std::vector<double> beta;
    std::vector<double> gamma;

    int depth() const { return static_cast<int>(beta.size()); }
    void validate() const;

    /// Flat layout [beta_1..beta_p, gamma_1..gamma_p], the optimizer's view.
    static QaoaParams from_flat(std::span<const double> flat);
    std::vector<double> to_flat() const;
};

struct RunResult {
    StateVector final_state;
    double expectation = 0.0;
    std::vector<double> distribution;  // measurement probabilities per basis index
    std::vector<double> costs;         // model value per basis index (constant included)
    std::uint64_t selected_bits = 0;   // most probable state, ties by lower cost then index
};

/// Spin-dependent part of the model per basis state (constant excluded).
std::vector<double> diagonal_spin_table(const IsingModel& model);

/// Multiplies amplitude x by exp(-i * gamma * table[x]).
void apply_phase_table(StateVector& state, std::span<const double> table, double gamma);

/// Cost evolution exp(-i * gamma * C): the composed diagonal of every
/// exp(-i*gamma*h_i*Z_i) and exp(-i*gamma*J_ij*Z_i*Z_j). The constant
/// contributes only an unobservable global phase and is never applied.
void cost_layer(StateVector& state, const IsingModel& model, double gamma);

/// exp(-i * beta * X_q) on every qubit.
void x_mixer_layer(StateVector& state, double beta);

/// Ring pair schedule for one parity mixer sweep over a register of size R,
/// as 0-based register positions: odd-start adjacent pairs, then even-start
/// pairs with the modular wrap, then the closing (R, 1) pair only for odd R.
std::vector<std::pair<int, int>> parity_ring_pairs(int ring_size);

/// One parity mixer sweep: exp(-i * beta * (XX + YY)) over the ring pairs of
/// the given qubit register. Conserves the register's excitation number.
void parity_mixer_layer(StateVector& state, std::span<const int> register_qubits, double beta);

/// Feasible entangled start for the hard constraint over 2N qubits:
/// assets 0..D-1 in |short=0, long=1>, the rest in Bell pairs
/// (|00> + |11>)/sqrt(2), so every branch nets to exactly D lots.
StateVector init_hard_constrained(int n_assets, int net_lots);

enum class Variant { soft, hard };

/// Owns the per-model diagonal tables and a workspace state so the classical
/// optimizer can evaluate thousands of circuits without re-deriving them.
/// One engine per execution context; independent engines run in parallel.
class QaoaEngine {
public:
    QaoaEngine(const PortfolioProblem& problem, const IsingModel& model, Variant variant);

    /// <psi_1|C|psi_1> at the given angles (fast path, no result assembly).
    double expectation(const QaoaParams& params);

    RunResult run(const QaoaParams& params);

    const std::vector<double>& costs() const { return costs_; }
    Variant variant() const { return variant_; }

private:
    void prepare(StateVector& state) const;
    void evolve(StateVector& state, const QaoaParams& params) const;

    PortfolioProblem problem_;
    Variant variant_;
    double constant_;
    std::vector<double> spin_table_;
    std::vector<double> costs_;
    std::vector<int> long_register_;
    std::vector<int> short_register_;
    StateVector workspace_;
};

/// Uniform start + X mixer, optimizing the soft-constraint model.
RunResult run_soft(const PortfolioProblem& problem, const QaoaParams& params,
                   const IsingModel& model_soft);

/// Entangled feasible start + parity mixers on the long and short registers,
/// optimizing the hard-constraint model.
RunResult run_hard(const PortfolioProblem& problem, const QaoaParams& params,
                   const IsingModel& model_hard);

/// Highest-probability basis state passing the filter; ties broken by lower
/// cost, then lower index. Throws when no accepted state has probability
/// above 1e-12.
std::uint64_t select_solution(const RunResult& result,
                              const std::function<bool(std::uint64_t)>& feasibility_filter);

}  // namespace qpr
