#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qadia/operator_core.hpp"
#include "qadia/pauli.hpp"
#include "qadia/rng.hpp"

using namespace qadia;

TEST_CASE("eig of Z") {
    const DenseOperator z{pauli_string_dense("Z")};
    const SpectrumReport rep = eig_hermitian(z);
    CHECK(rep.eigenvalues[0] == doctest::Approx(-1.0));
    CHECK(rep.eigenvalues[1] == doctest::Approx(1.0));
}

TEST_CASE("ZZ - ZI + IZ has ground state |10> at energy -3") {
    PauliSum h;
    h.qubits = 2;
    h.add(1.0, "ZZ").add(-1.0, "ZI").add(1.0, "IZ");
    const SpectrumReport rep = eig_hermitian(to_dense(h));
    CHECK(rep.eigenvalues[0] == doctest::Approx(-3.0).epsilon(1e-12));
    // |10> = qubit2 set, qubit1 clear = index 2
    CHECK(std::abs(rep.eigenvectors(2, 0)) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("eig rejects non-Hermitian input") {
    Matrix m(2, 2);
    m << 0, 1, 0, 0;
    CHECK_THROWS_AS(eig_hermitian(m), std::invalid_argument);
}

TEST_CASE("eig reconstructs the operator") {
    Rng rng(3);
    const Matrix h = rng.random_hermitian(16);
    const SpectrumReport rep = eig_hermitian(h);
    const Matrix rebuilt = rep.eigenvectors *
                           rep.eigenvalues.cast<Complex>().asDiagonal() *
                           rep.eigenvectors.adjoint();
    CHECK(max_abs(rebuilt - h) < 1e-9 * max_abs(h));
}

TEST_CASE("unitary_exp basics") {
    // K = pi |1><1| at s=1 gives Z up to the diag(1,-1) identification
    Matrix k = Matrix::Zero(2, 2);
    k(1, 1) = M_PI;
    const Matrix u = unitary_exp(k, 1.0);
    CHECK(std::abs(u(0, 0) - Complex{1, 0}) < 1e-12);
    CHECK(std::abs(u(1, 1) - Complex{-1, 0}) < 1e-10);

    Rng rng(5);
    const Matrix any_k = rng.random_hermitian(8);
    CHECK(max_abs(unitary_exp(any_k, 0.0) - Matrix::Identity(8, 8)) < 1e-12);
    CHECK(is_unitary(unitary_exp(any_k, 0.37)));
}

TEST_CASE("principal_log of I and CZ") {
    CHECK(max_abs(principal_log(Matrix(Matrix::Identity(4, 4)))) < 1e-12);
    Matrix cz = Matrix::Identity(4, 4);
    cz(3, 3) = -1;
    const Matrix k = principal_log(cz);
    Matrix want = Matrix::Zero(4, 4);
    want(3, 3) = M_PI;
    CHECK(max_abs(k - want) < 1e-10);
}

TEST_CASE("exp(i log U) = U for CNOT and the generator is pi times a projector") {
    Matrix cnot = Matrix::Identity(4, 4);
    cnot(2, 2) = 0; cnot(3, 3) = 0; cnot(2, 3) = 1; cnot(3, 2) = 1;
    const Matrix k = principal_log(cnot);
    CHECK(max_abs(unitary_exp(k, 1.0) - cnot) < 1e-10);
    const SpectrumReport rep = eig_hermitian(k);
    CHECK(rep.eigenvalues[rep.eigenvalues.size() - 1] == doctest::Approx(M_PI));
    CHECK(rep.eigenvalues[rep.eigenvalues.size() - 2] == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("round trip exp(log U) on random unitaries") {
    Rng rng(9);
    for (int t = 0; t < 25; ++t) {
        const Matrix u = rng.random_unitary(8);
        const Matrix k = principal_log(u);
        CHECK(is_hermitian(k, 1e-10));
        CHECK(max_abs(unitary_exp(k, 1.0) - u) < 1e-9);
    }
}

TEST_CASE("kron_lift placement is little-endian") {
    const Matrix z = pauli_string_dense("Z");
    // Z on qubit 1 of 2 = IZ in ket order, i.e. diag(1,-1,1,-1)
    const DenseOperator lifted = kron_lift(z, {1}, 2);
    CHECK(lifted.m(0, 0) == Complex{1, 0});
    CHECK(lifted.m(1, 1) == Complex{-1, 0});
    CHECK(lifted.m(2, 2) == Complex{1, 0});
    CHECK(lifted.m(3, 3) == Complex{-1, 0});
    CHECK(max_abs(lifted.m - to_dense(PauliSum({{1.0, "ZI"}}, 2))) < 1e-14);

    CHECK(max_abs(kron_lift(Matrix(Matrix::Identity(2, 2)), {3}, 4).m -
                  Matrix::Identity(16, 16)) < 1e-14);
}

TEST_CASE("kron_lift CNOT truth table on 3 qubits") {
    Matrix cnot = Matrix::Identity(4, 4);
    cnot(1, 1) = 0; cnot(3, 3) = 0; cnot(1, 3) = 1; cnot(3, 1) = 1;
    // control qubit 1, target qubit 2, lifted into 3 qubits:
    // |010> (q2 set) stays; |011> (q1,q2) -> |001>; check a mapped pair
    const DenseOperator u = kron_lift(cnot, {1, 2}, 3);
    // basis index 1 = |001> = q1 -> flips q2 -> index 3
    CHECK(u.m(3, 1) == Complex{1, 0});
    CHECK(u.m(1, 3) == Complex{1, 0});
    CHECK(u.m(2, 2) == Complex{1, 0});
    CHECK(u.m(0, 0) == Complex{1, 0});
}

TEST_CASE("kron_lift validates targets") {
    const Matrix z = pauli_string_dense("Z");
    CHECK_THROWS_AS(kron_lift(z, {0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(kron_lift(z, {3}, 2), std::invalid_argument);
    CHECK_THROWS_AS(kron_lift(Matrix(Matrix::Identity(4, 4)), {1, 1}, 2), std::invalid_argument);
}

TEST_CASE("partial_trace basics") {
    // |00><00| reduced to qubit 1 = |0><0|
    Matrix rho = Matrix::Zero(4, 4);
    rho(0, 0) = 1.0;
    const DenseOperator red = partial_trace(DenseOperator(rho), {1});
    CHECK(red.m(0, 0) == Complex{1, 0});
    CHECK(std::abs(red.m(1, 1)) < 1e-14);
}

TEST_CASE("GHZ3 reduced to any two qubits is the classical mixture") {
    Vector ghz = Vector::Zero(8);
    ghz[0] = ghz[7] = 1.0 / std::sqrt(2.0);
    const DenseOperator rho{Matrix(ghz * ghz.adjoint())};
    for (const auto& keep : {std::vector<int>{1, 2}, {1, 3}, {2, 3}}) {
        const Matrix red = partial_trace(rho, keep).m;
        Matrix want = Matrix::Zero(4, 4);
        want(0, 0) = 0.5;
        want(3, 3) = 0.5;
        CHECK(max_abs(red - want) < 1e-12);
    }
}

TEST_CASE("partial_trace of a product state gives the marginals") {
    Rng rng(21);
    const Vector a = rng.random_state_vector(2);
    const Vector b = rng.random_state_vector(4);
    Vector prod(8);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 2; ++j) prod[2 * i + j] = b[i] * a[j]; // qubit 1 = a
    const DenseOperator rho{Matrix(prod * prod.adjoint())};
    CHECK(max_abs(partial_trace(rho, {1}).m - Matrix(a * a.adjoint())) < 1e-12);
    CHECK(max_abs(partial_trace(rho, {2, 3}).m - Matrix(b * b.adjoint())) < 1e-12);
    CHECK(std::abs(partial_trace(rho, {2}).m.trace() - Complex{1, 0}) < 1e-12);
}

TEST_CASE("partial_trace rejects non-density input") {
    Matrix rho = Matrix::Identity(4, 4); // trace 4
    CHECK_THROWS_AS(partial_trace(DenseOperator(rho), {1}), std::invalid_argument);
}
