#pragma once

// Exact dense complex linear algebra on 2^n-dimensional operators:
// Hermitian eigendecomposition, unitary exp/log on the principal
// branch, tensor lifts, partial trace.

#include "qadia/types.hpp"

#include <vector>

namespace qadia {

// Eigendecomposition of a Hermitian operator, eigenvalues ascending.
// Throws std::invalid_argument on non-Hermitian input.
SpectrumReport eig_hermitian(const DenseOperator& op, double herm_tol = tol::hermitian);
SpectrumReport eig_hermitian(const Matrix& m, double herm_tol = tol::hermitian);

// exp(i s K) for Hermitian K.
DenseOperator unitary_exp(const DenseOperator& K, double s);
Matrix unitary_exp(const Matrix& K, double s);

// K = -i log U with eigenphases on (-pi, pi]. An eigenphase within
// branch_tol of -pi is mapped to +pi with a warning on stderr.
DenseOperator principal_log(const DenseOperator& U, double branch_tol = tol::log_branch);
Matrix principal_log(const Matrix& U, double branch_tol = tol::log_branch);

// Embed `gate` acting on `targets` (1-based, qubit 1 = LSB) into an
// n-qubit operator, identity elsewhere. gate bit k corresponds to
// targets[k].
DenseOperator kron_lift(const Matrix& gate, const std::vector<int>& targets, int n);

// Trace out every qubit not in `keep` from a density matrix.
DenseOperator partial_trace(const DenseOperator& rho, const std::vector<int>& keep);

// Ground eigenvector of a Hermitian operator.
Vector ground_state(const Matrix& h);

// Number of eigenvalues within `tol` of the smallest.
int ground_degeneracy(const RealVector& eigenvalues, double tol = tol::degeneracy);

} // namespace qadia
