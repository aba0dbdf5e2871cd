#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace qadia {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Qubit convention, used everywhere:
//   - qubit 1 is the least significant bit of the basis index
//     (ket |b_n ... b_2 b_1>, rightmost symbol = qubit 1),
//   - Pauli letter strings are written qubit 1 -> n left to right.
// Under this pairing H = ZZ - ZI + IZ has ground state |10> and the
// CNOT-compiled final Hamiltonian -ZZ+ZI+IZ has ground state |11>.

// Default numeric tolerances; ops take them as defaulted parameters.
namespace tol {
inline constexpr double hermitian = 1e-12;
inline constexpr double unitary = 1e-10;
inline constexpr double norm = 1e-12;
inline constexpr double degeneracy = 1e-8;
inline constexpr double log_branch = 1e-12;
} // namespace tol

inline int qubit_count_for_dim(Eigen::Index dim) {
    int n = 0;
    while ((Eigen::Index{1} << n) < dim) ++n;
    if ((Eigen::Index{1} << n) != dim)
        throw std::invalid_argument("dimension " + std::to_string(dim) + " is not a power of two");
    return n;
}

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

inline bool is_hermitian(const Matrix& m, double t = tol::hermitian) {
    const double scale = std::max(1.0, max_abs(m));
    return max_abs(m - m.adjoint()) <= t * scale;
}

inline bool is_unitary(const Matrix& m, double t = tol::unitary) {
    Matrix g = m.adjoint() * m;
    g.diagonal().array() -= 1.0;
    return max_abs(g) <= t;
}

// 2^n x 2^n complex matrix with its qubit count.
struct DenseOperator {
    Matrix m;
    int qubits = 0;

    DenseOperator() = default;
    explicit DenseOperator(Matrix mat) : m(std::move(mat)) {
        if (m.rows() != m.cols()) throw std::invalid_argument("operator must be square");
        if (!m.allFinite()) throw std::invalid_argument("operator has non-finite entries");
        qubits = qubit_count_for_dim(m.rows());
    }

    Eigen::Index dim() const { return m.rows(); }
};

// Unit vector of length 2^n, little-endian basis ordering.
struct QuantumState {
    Vector amp;
    int qubits = 0;

    QuantumState() = default;
    explicit QuantumState(Vector v, bool renormalize = false) : amp(std::move(v)) {
        if (!amp.allFinite()) throw std::invalid_argument("state has non-finite amplitudes");
        qubits = qubit_count_for_dim(amp.size());
        const double n = amp.norm();
        if (renormalize) {
            if (n == 0.0) throw std::invalid_argument("cannot normalize zero state");
            amp /= n;
        } else if (std::abs(n - 1.0) > tol::norm) {
            throw std::invalid_argument("state norm deviates from 1 by " + std::to_string(std::abs(n - 1.0)));
        }
    }

    static QuantumState basis(int qubits, Eigen::Index index) {
        Vector v = Vector::Zero(Eigen::Index{1} << qubits);
        v[index] = 1.0;
        return QuantumState(std::move(v));
    }

    Eigen::Index dim() const { return amp.size(); }
};

struct SpectrumReport {
    RealVector eigenvalues;   // ascending
    Matrix eigenvectors;      // columns, orthonormal
    double gap = 0.0;         // E1 - E0 (0 for dim 1)
    double degeneracy_tol = tol::degeneracy;
};

// |<a|b>|^2
inline double fidelity(const Vector& a, const Vector& b) {
    const Complex ov = a.adjoint() * b;
    return std::norm(ov);
}

} // namespace qadia
