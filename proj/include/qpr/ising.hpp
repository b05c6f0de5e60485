#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <json.hpp>

namespace qpr {

struct CouplingEntry {
    std::uint32_t i;  // i < j
    std::uint32_t j;
    double value;
};

/// Quadratic cost over +/-1 spins: c + sum_i h_i s_i + sum_{i<j} J_ij s_i s_j.
/// Couplings are stored upper-triangular. Immutable once built; safe for
/// shared concurrent reads.
class IsingModel {
public:
    IsingModel() = default;

    /// Canonical-form constructor. `coupling` is a dense n*n row-major matrix
    /// whose diagonal and lower triangle must be zero.
    IsingModel(std::uint32_t n_spins, double constant, std::vector<double> bias,
               std::vector<double> coupling);

    static IsingModel zero(std::uint32_t n_spins);

    std::uint32_t n_spins() const { return n_spins_; }
    double constant() const { return constant_; }
    double bias(std::uint32_t i) const { return bias_[i]; }
    std::span<const double> bias_vector() const { return bias_; }
    double coupling(std::uint32_t i, std::uint32_t j) const;

    /// Nonzero upper-triangular couplings, sorted by (i, j).
    std::vector<CouplingEntry> coupling_entries() const;

    /// c + sum h_i s_i + sum_{i<j} J_ij s_i s_j for spins in {-1, +1}.
    double evaluate(std::span<const int> spins) const;

private:
    std::uint32_t n_spins_ = 0;
    double constant_ = 0.0;
    std::vector<double> bias_;
    std::vector<double> coupling_;  // dense n*n, entry (i, j) at i*n + j, i < j
};

/// Accumulates raw linear/quadratic spin terms into canonical form:
/// an empty index list adds to the constant, one index to the bias, a
/// distinct pair to the coupling (order-insensitive), and a repeated index
/// folds s_i^2 = 1 into the constant.
class IsingBuilder {
public:
    explicit IsingBuilder(std::uint32_t n_spins);

    IsingBuilder& add_constant(double value);
    IsingBuilder& add_linear(std::uint32_t i, double value);
    IsingBuilder& add_quadratic(std::uint32_t i, std::uint32_t j, double value);
    IsingBuilder& add_term(std::initializer_list<std::uint32_t> indices, double value);
    IsingBuilder& add_term(std::span<const std::uint32_t> indices, double value);

    IsingModel build() const;

private:
    void check_index(std::uint32_t i) const;

    std::uint32_t n_spins_;
    double constant_ = 0.0;
    std::vector<double> bias_;
    std::vector<double> coupling_;
};

/// Componentwise a + scale * b. Spin counts must match.
IsingModel add_scaled(const IsingModel& a, const IsingModel& b, double scale);

/// JSON schema: {"n_spins": n, "c": c, "h": [...], "J": [[i, j, value], ...]}.
void to_json(nlohmann::json& j, const IsingModel& model);
void from_json(const nlohmann::json& j, IsingModel& model);

}  // namespace qpr
