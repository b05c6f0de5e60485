#include "qpr/ising.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace qpr {

IsingModel::IsingModel(std::uint32_t n_spins, double constant, std::vector<double> bias,
                       std::vector<double> coupling)
    : n_spins_(n_spins),
      constant_(constant),
      bias_(std::move(bias)),
      coupling_(std::move(coupling)) {
    if (bias_.size() != n_spins_ || coupling_.size() != std::size_t{n_spins_} * n_spins_) {
        throw std::invalid_argument("IsingModel: bias/coupling sizes do not match n_spins");
    }
    for (std::uint32_t i = 0; i < n_spins_; ++i) {
        for (std::uint32_t j = 0; j <= i; ++j) {
            if (coupling_[std::size_t{i} * n_spins_ + j] != 0.0) {
                throw std::invalid_argument(
                    "IsingModel: coupling matrix must be strictly upper-triangular");
            }
        }
    }
}

IsingModel IsingModel::zero(std::uint32_t n_spins) {
    return IsingModel(n_spins, 0.0, std::vector<double>(n_spins, 0.0),
                      std::vector<double>(std::size_t{n_spins} * n_spins, 0.0));
}

double IsingModel::coupling(std::uint32_t i, std::uint32_t j) const {
    if (i >= n_spins_ || j >= n_spins_ || i == j) {
        throw std::out_of_range("IsingModel::coupling: bad index pair");
    }
    if (i > j) std::swap(i, j);
    return coupling_[std::size_t{i} * n_spins_ + j];
}

std::vector<CouplingEntry> IsingModel::coupling_entries() const {
    std::vector<CouplingEntry> entries;
    for (std::uint32_t i = 0; i < n_spins_; ++i) {
        for (std::uint32_t j = i + 1; j < n_spins_; ++j) {
            const double v = coupling_[std::size_t{i} * n_spins_ + j];
            if (v != 0.0) entries.push_back({i, j, v});
        }
    }
    return entries;
}

double IsingModel::evaluate(std::span<const int> spins) const {
    if (spins.size() != n_spins_) {
        throw std::invalid_argument("IsingModel::evaluate: expected " + std::to_string(n_spins_) +
                                    " spins, got " + std::to_string(spins.size()));
    }
    for (const int s : spins) {
        if (s != 1 && s != -1) {
            throw std::invalid_argument("IsingModel::evaluate: spins must be +1 or -1");
        }
    }
    double acc = constant_;
    for (std::uint32_t i = 0; i < n_spins_; ++i) {
        acc += bias_[i] * spins[i];
    }
    for (std::uint32_t i = 0; i < n_spins_; ++i) {
        const std::size_t row = std::size_t{i} * n_spins_;
        for (std::uint32_t j = i + 1; j < n_spins_; ++j) {
            const double v = coupling_[row + j];
            if (v != 0.0) acc += v * spins[i] * spins[j];
        }
    }
    return acc;
}

IsingBuilder::IsingBuilder(std::uint32_t n_spins)
    : n_spins_(n_spins),
      bias_(n_spins, 0.0),
      coupling_(std::size_t{n_spins} * n_spins, 0.0) {}

void IsingBuilder::check_index(std::uint32_t i) const {
    if (i >= n_spins_) {
        throw std::invalid_argument("IsingBuilder: spin index " + std::to_string(i) +
                                    " out of range for " + std::to_string(n_spins_) + " spins");
    }
}

IsingBuilder& IsingBuilder::add_constant(double value) {
    constant_ += value;
    return *this;
}

IsingBuilder& IsingBuilder::add_linear(std::uint32_t i, double value) {
    check_index(i);
    bias_[i] += value;
    return *this;
}

IsingBuilder& IsingBuilder::add_quadratic(std::uint32_t i, std::uint32_t j, double value) {
    check_index(i);
    check_index(j);
    if (i == j) {
        constant_ += value;  // s_i^2 = 1
        return *this;
    }
    if (i > j) std::swap(i, j);
    coupling_[std::size_t{i} * n_spins_ + j] += value;
    return *this;
}

IsingBuilder& IsingBuilder::add_term(std::initializer_list<std::uint32_t> indices, double value) {
    return add_term(std::span<const std::uint32_t>(indices.begin(), indices.size()), value);
}

IsingBuilder& IsingBuilder::add_term(std::span<const std::uint32_t> indices, double value) {
    switch (indices.size()) {
        case 0:
            return add_constant(value);
        case 1:
            return add_linear(indices[0], value);
        case 2:
            return add_quadratic(indices[0], indices[1], value);
        default:
            throw std::invalid_argument("IsingBuilder: at most quadratic terms are supported");
    }
}

IsingModel IsingBuilder::build() const {
    return IsingModel(n_spins_, constant_, bias_, coupling_);
}

IsingModel add_scaled(const IsingModel& a, const IsingModel& b, double scale) {
    if (a.n_spins() != b.n_spins()) {
        throw std::invalid_argument("add_scaled: models must have equal spin counts");
    }
    const std::uint32_t n = a.n_spins();
    std::vector<double> bias(n, 0.0);
    for (std::uint32_t i = 0; i < n; ++i) {
        bias[i] = a.bias(i) + scale * b.bias(i);
    }
    std::vector<double> coupling(std::size_t{n} * n, 0.0);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            coupling[std::size_t{i} * n + j] = a.coupling(i, j) + scale * b.coupling(i, j);
        }
    }
    return IsingModel(n, a.constant() + scale * b.constant(), std::move(bias),
                      std::move(coupling));
}

void to_json(nlohmann::json& j, const IsingModel& model) {
    nlohmann::json couplings = nlohmann::json::array();
    for (const CouplingEntry& entry : model.coupling_entries()) {
        couplings.push_back({entry.i, entry.j, entry.value});
    }
    j = nlohmann::json{{"n_spins", model.n_spins()},
                       {"c", model.constant()},
                       {"h", model.bias_vector()},
                       {"J", std::move(couplings)}};
}

void from_json(const nlohmann::json& j, IsingModel& model) {
    const auto n = j.at("n_spins").get<std::uint32_t>();
    auto bias = j.at("h").get<std::vector<double>>();
    if (bias.size() != n) {
        throw std::invalid_argument("IsingModel json: h length does not match n_spins");
    }
    std::vector<double> coupling(std::size_t{n} * n, 0.0);
    for (const auto& entry : j.at("J")) {
        if (!entry.is_array() || entry.size() != 3) {
            throw std::invalid_argument("IsingModel json: J entries must be [i, j, value]");
        }
        auto i = entry[0].get<std::uint32_t>();
        auto k = entry[1].get<std::uint32_t>();
        const auto v = entry[2].get<double>();
        if (i >= n || k >= n || i == k) {
            throw std::invalid_argument("IsingModel json: bad J index pair");
        }
        if (i > k) std::swap(i, k);
        coupling[std::size_t{i} * n + k] += v;
    }
    model = IsingModel(n, j.at("c").get<double>(), std::move(bias), std::move(coupling));
}

}  // namespace qpr
