#include "qpr/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace qpr {

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::runtime_error("StateVector: qubit count " + std::to_string(n_qubits) +
                                 " outside capacity [1, " + std::to_string(kMaxQubits) + "]");
    }
    amplitudes_.assign(std::uint64_t{1} << n_qubits, complex_t{0.0, 0.0});
    amplitudes_[0] = complex_t{1.0, 0.0};
}

StateVector init_uniform(int n_qubits) {
    StateVector state(n_qubits);
    const double amp = std::pow(2.0, -0.5 * n_qubits);
    std::ranges::fill(state.amplitudes(), complex_t{amp, 0.0});
    return state;
}

void StateVector::check_qubit(int qubit) const {
    if (qubit < 0 || qubit >= n_qubits_) {
        throw std::out_of_range("qubit index " + std::to_string(qubit) + " out of range for " +
                                std::to_string(n_qubits_) + " qubits");
    }
}

void StateVector::check_pair(int qubit_a, int qubit_b) const {
    check_qubit(qubit_a);
    check_qubit(qubit_b);
    if (qubit_a == qubit_b) {
        throw std::out_of_range("two-qubit operation needs distinct qubits, got " +
                                std::to_string(qubit_a) + " twice");
    }
}

void StateVector::apply_exp_z(int qubit, double angle) {
    check_qubit(qubit);
    // spin -1 on bit 0, spin +1 on bit 1
    const complex_t phase_zero = std::polar(1.0, +angle);
    const complex_t phase_one = std::polar(1.0, -angle);
    const std::uint64_t mask = std::uint64_t{1} << qubit;
    const std::uint64_t dim = dimension();
    for (std::uint64_t x = 0; x < dim; ++x) {
        amplitudes_[x] *= (x & mask) ? phase_one : phase_zero;
    }
}

void StateVector::apply_exp_zz(int qubit_a, int qubit_b, double angle) {
    check_pair(qubit_a, qubit_b);
    const complex_t phase_equal = std::polar(1.0, -angle);   // spin product +1
    const complex_t phase_mixed = std::polar(1.0, +angle);   // spin product -1
    const std::uint64_t dim = dimension();
    for (std::uint64_t x = 0; x < dim; ++x) {
        const bool equal = (((x >> qubit_a) ^ (x >> qubit_b)) & 1u) == 0;
        amplitudes_[x] *= equal ? phase_equal : phase_mixed;
    }
}

void StateVector::apply_exp_x(int qubit, double angle) {
    check_qubit(qubit);
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const std::uint64_t mask = std::uint64_t{1} << qubit;
    const std::uint64_t lo_mask = mask - 1;
    const std::uint64_t hi_mask = ~lo_mask;
    const std::uint64_t half = dimension() >> 1;
    for (std::uint64_t k = 0; k < half; ++k) {
        const std::uint64_t i0 = ((k & hi_mask) << 1) | (k & lo_mask);
        const std::uint64_t i1 = i0 | mask;
        const complex_t a0 = amplitudes_[i0];
        const complex_t a1 = amplitudes_[i1];
        amplitudes_[i0] = complex_t{c * a0.real() + s * a1.imag(), c * a0.imag() - s * a1.real()};
        amplitudes_[i1] = complex_t{c * a1.real() + s * a0.imag(), c * a1.imag() - s * a0.real()};
    }
}

void StateVector::apply_exp_xxyy(int qubit_a, int qubit_b, double angle) {
    check_pair(qubit_a, qubit_b);
    // XX + YY acts as twice a bit-flip on the odd-parity pair subspace.
    const double c = std::cos(2.0 * angle);
    const double s = std::sin(2.0 * angle);
    const std::uint64_t mask_a = std::uint64_t{1} << qubit_a;
    const std::uint64_t mask_b = std::uint64_t{1} << qubit_b;
    const int min_q = std::min(qubit_a, qubit_b);
    const int max_q = std::max(qubit_a, qubit_b);
    const std::uint64_t min_mask = std::uint64_t{1} << min_q;
    const std::uint64_t max_mask = std::uint64_t{1} << (max_q - 1);
    const std::uint64_t lo_mask = min_mask - 1;
    const std::uint64_t mid_mask = (max_mask - 1) ^ lo_mask;
    const std::uint64_t hi_mask = ~(max_mask - 1);
    const std::uint64_t quarter = dimension() >> 2;
    for (std::uint64_t k = 0; k < quarter; ++k) {
        const std::uint64_t i00 = ((k & hi_mask) << 2) | ((k & mid_mask) << 1) | (k & lo_mask);
        const std::uint64_t ia = i00 | mask_a;
        const std::uint64_t ib = i00 | mask_b;
        const complex_t xa = amplitudes_[ia];
        const complex_t xb = amplitudes_[ib];
        amplitudes_[ia] = complex_t{c * xa.real() + s * xb.imag(), c * xa.imag() - s * xb.real()};
        amplitudes_[ib] = complex_t{c * xb.real() + s * xa.imag(), c * xb.imag() - s * xa.real()};
    }
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> probs(amplitudes_.size());
    for (std::size_t x = 0; x < amplitudes_.size(); ++x) {
        probs[x] = std::norm(amplitudes_[x]);
    }
    return probs;
}

double StateVector::norm() const {
    double total = 0.0;
    for (const complex_t& a : amplitudes_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

std::map<std::uint64_t, std::uint64_t> StateVector::sample(std::uint64_t shots,
                                                           std::uint64_t seed) const {
    if (shots < 1) {
        throw std::invalid_argument("sample: shots must be >= 1");
    }
    const std::uint64_t dim = dimension();
    std::vector<double> cdf(dim);
    double acc = 0.0;
    for (std::uint64_t x = 0; x < dim; ++x) {
        acc += std::norm(amplitudes_[x]);
        cdf[x] = acc;
    }
    for (std::uint64_t x = 0; x < dim; ++x) {
        cdf[x] /= acc;
    }
    cdf[dim - 1] = 1.0;

    std::mt19937_64 rng(seed);
    std::map<std::uint64_t, std::uint64_t> counts;
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        // uniform in [0, 1), identical on every platform
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const auto idx = static_cast<std::uint64_t>(it - cdf.begin());
        ++counts[idx];
    }
    return counts;
}

}  // namespace qpr
