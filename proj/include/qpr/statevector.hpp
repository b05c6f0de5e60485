#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace qpr {

using complex_t = std::complex<double>;

/// Dense noiseless statevector over n qubits.
///
/// Conventions used throughout the library:
///  - basis index bit k is qubit k, qubit 0 least significant;
///  - bit 0 maps to spin -1 and bit 1 to spin +1 (s = 2x - 1);
///  - every rotation is exp(-i * angle * P) for its Pauli string P, with no
///    hidden factor of two. The caller folds coefficients into the angle.
///
/// Amplitudes are updated in place; one state is owned by one execution
/// context at a time.
class StateVector {
public:
    static constexpr int kMaxQubits = 24;

    /// Computational basis state |0...0>.
    explicit StateVector(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t dimension() const { return std::uint64_t{1} << n_qubits_; }

    std::span<complex_t> amplitudes() { return amplitudes_; }
    std::span<const complex_t> amplitudes() const { return amplitudes_; }

    /// exp(-i * angle * Z_q), where Z_q has eigenvalue 2b - 1 on bit b.
    void apply_exp_z(int qubit, double angle);

    /// exp(-i * angle * Z_a Z_b).
    void apply_exp_zz(int qubit_a, int qubit_b, double angle);

    /// exp(-i * angle * X_q).
    void apply_exp_x(int qubit, double angle);

    /// exp(-i * angle * (X_a X_b + Y_a Y_b)). Mixes only the odd-parity
    /// subspace of the pair; |00> and |11> components are untouched.
    void apply_exp_xxyy(int qubit_a, int qubit_b, double angle);

    std::vector<double> probabilities() const;

    /// l2 norm (1 up to roundoff after any sequence of operations).
    double norm() const;

    /// Draws `shots` basis states from the measurement distribution using a
    /// deterministic seeded generator. Returns basis index -> count.
    std::map<std::uint64_t, std::uint64_t> sample(std::uint64_t shots,
                                                  std::uint64_t seed) const;

private:
    void check_qubit(int qubit) const;
    void check_pair(int qubit_a, int qubit_b) const;

    int n_qubits_;
    std::vector<complex_t> amplitudes_;
};

/// Uniform superposition |+>^n, every amplitude 2^(-n/2).
StateVector init_uniform(int n_qubits);

}  // namespace qpr
