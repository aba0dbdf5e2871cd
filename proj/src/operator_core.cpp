#include "qadia/operator_core.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>

namespace qadia {

SpectrumReport eig_hermitian(const Matrix& m, double herm_tol) {
    if (!is_hermitian(m, herm_tol))
        throw std::invalid_argument("eig_hermitian: operator is not Hermitian within tolerance");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eig_hermitian: eigensolver failed");
    SpectrumReport rep;
    rep.eigenvalues = solver.eigenvalues();
    rep.eigenvectors = solver.eigenvectors();
    rep.gap = m.rows() > 1 ? rep.eigenvalues[1] - rep.eigenvalues[0] : 0.0;
    return rep;
}

SpectrumReport eig_hermitian(const DenseOperator& op, double herm_tol) {
    return eig_hermitian(op.m, herm_tol);
}

Matrix unitary_exp(const Matrix& K, double s) {
    const SpectrumReport rep = eig_hermitian(K);
    Vector phases(rep.eigenvalues.size());
    for (Eigen::Index i = 0; i < phases.size(); ++i)
        phases[i] = std::polar(1.0, s * rep.eigenvalues[i]);
    return rep.eigenvectors * phases.asDiagonal() * rep.eigenvectors.adjoint();
}

DenseOperator unitary_exp(const DenseOperator& K, double s) {
    return DenseOperator(unitary_exp(K.m, s));
}

Matrix principal_log(const Matrix& U, double branch_tol) {
    if (!is_unitary(U))
        throw std::invalid_argument("principal_log: operator is not unitary within tolerance");
    // A unitary is normal, so its Schur form is diagonal up to roundoff
    // and Q is an orthonormal eigenframe even across degeneracies.
    Eigen::ComplexSchur<Matrix> schur(U);
    if (schur.info() != Eigen::Success)
        throw std::runtime_error("principal_log: Schur decomposition failed");
    const Matrix& q = schur.matrixU();
    RealVector theta(U.rows());
    for (Eigen::Index i = 0; i < U.rows(); ++i) {
        double th = std::arg(schur.matrixT()(i, i));
        if (th <= -M_PI + branch_tol) {
            std::cerr << "qadia: principal_log eigenphase at branch cut, mapping -pi -> +pi\n";
            th += 2.0 * M_PI;
        }
        theta[i] = th;
    }
    Matrix k = q * theta.asDiagonal() * q.adjoint();
    return 0.5 * (k + Matrix(k.adjoint()));
}

DenseOperator principal_log(const DenseOperator& U, double branch_tol) {
    return DenseOperator(principal_log(U.m, branch_tol));
}

DenseOperator kron_lift(const Matrix& gate, const std::vector<int>& targets, int n) {
    const int k = static_cast<int>(targets.size());
    if (gate.rows() != (Eigen::Index{1} << k) || gate.rows() != gate.cols())
        throw std::invalid_argument("kron_lift: gate dimension does not match target count");
    for (int t : targets) {
        if (t < 1 || t > n) throw std::invalid_argument("kron_lift: target index out of range");
        if (std::count(targets.begin(), targets.end(), t) != 1)
            throw std::invalid_argument("kron_lift: duplicate target index");
    }
    const Eigen::Index dim = Eigen::Index{1} << n;
    Matrix out = Matrix::Zero(dim, dim);
    std::size_t rest_mask = (std::size_t{1} << n) - 1;
    for (int t : targets) rest_mask &= ~(std::size_t{1} << (t - 1));
    for (Eigen::Index col = 0; col < dim; ++col) {
        const std::size_t rest = static_cast<std::size_t>(col) & rest_mask;
        std::size_t gcol = 0;
        for (int b = 0; b < k; ++b)
            gcol |= ((static_cast<std::size_t>(col) >> (targets[b] - 1)) & 1u) << b;
        for (std::size_t grow = 0; grow < (std::size_t{1} << k); ++grow) {
            const Complex v = gate(static_cast<Eigen::Index>(grow), static_cast<Eigen::Index>(gcol));
            if (v == Complex{0.0, 0.0}) continue;
            std::size_t row = rest;
            for (int b = 0; b < k; ++b)
                row |= ((grow >> b) & 1u) << (targets[b] - 1);
            out(static_cast<Eigen::Index>(row), col) = v;
        }
    }
    return DenseOperator(std::move(out));
}

DenseOperator partial_trace(const DenseOperator& rho, const std::vector<int>& keep) {
    const int n = rho.qubits;
    if (std::abs(rho.m.trace() - Complex{1.0, 0.0}) > 1e-10)
        throw std::invalid_argument("partial_trace: trace deviates from 1");
    if (!is_hermitian(rho.m, 1e-10))
        throw std::invalid_argument("partial_trace: density matrix is not Hermitian");
    {
        const SpectrumReport rep = eig_hermitian(rho.m, 1e-10);
        if (rep.eigenvalues[0] < -1e-8)
            throw std::invalid_argument("partial_trace: density matrix is not positive semidefinite");
    }
    std::vector<int> kept = keep;
    std::sort(kept.begin(), kept.end());
    for (int q : kept)
        if (q < 1 || q > n) throw std::invalid_argument("partial_trace: kept qubit out of range");
    std::vector<int> traced;
    for (int q = 1; q <= n; ++q)
        if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);

    const int nk = static_cast<int>(kept.size());
    const int nt = static_cast<int>(traced.size());
    const Eigen::Index dk = Eigen::Index{1} << nk;
    Matrix out = Matrix::Zero(dk, dk);
    auto expand = [&](std::size_t kbits, std::size_t tbits) {
        std::size_t idx = 0;
        for (int b = 0; b < nk; ++b) idx |= ((kbits >> b) & 1u) << (kept[b] - 1);
        for (int b = 0; b < nt; ++b) idx |= ((tbits >> b) & 1u) << (traced[b] - 1);
        return static_cast<Eigen::Index>(idx);
    };
    for (std::size_t i = 0; i < static_cast<std::size_t>(dk); ++i)
        for (std::size_t j = 0; j < static_cast<std::size_t>(dk); ++j)
            for (std::size_t t = 0; t < (std::size_t{1} << nt); ++t)
                out(i, j) += rho.m(expand(i, t), expand(j, t));
    return DenseOperator(std::move(out));
}

Vector ground_state(const Matrix& h) {
    return eig_hermitian(h).eigenvectors.col(0);
}

int ground_degeneracy(const RealVector& eigenvalues, double tol) {
    int count = 0;
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i)
        if (eigenvalues[i] - eigenvalues[0] <= tol) ++count;
    return count;
}

} // namespace qadia
