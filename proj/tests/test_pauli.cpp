#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qadia/operator_core.hpp"
#include "qadia/pauli.hpp"
#include "qadia/rng.hpp"

using namespace qadia;

namespace {

PauliSum random_sum(Rng& rng, int n, int max_weight, int terms) {
    PauliSum out;
    out.qubits = n;
    const char alpha[3] = {'X', 'Y', 'Z'};
    for (int t = 0; t < terms; ++t) {
        std::string l(n, 'I');
        const int w = 1 + static_cast<int>(rng.below(max_weight));
        std::vector<int> qubits;
        while (static_cast<int>(qubits.size()) < w) {
            const int q = static_cast<int>(rng.below(n));
            if (std::find(qubits.begin(), qubits.end(), q) == qubits.end()) qubits.push_back(q);
        }
        for (int q : qubits) l[q] = alpha[rng.below(3)];
        out.add(rng.normal(), l);
    }
    out.normalize();
    return out;
}

} // namespace

TEST_CASE("single-term decomposition") {
    const PauliSum d = pauli_decompose(pauli_string_dense("ZZ"));
    REQUIRE(d.terms.size() == 1);
    CHECK(d.terms[0].letters == "ZZ");
    CHECK(d.terms[0].coeff == doctest::Approx(1.0));
}

TEST_CASE("decompose rejects non-Hermitian input") {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(pauli_decompose(m), std::invalid_argument);
}

TEST_CASE("decompose-dense round trip on random Hermitian operators") {
    Rng rng(17);
    for (int t = 0; t < 10; ++t) {
        const Matrix h = rng.random_hermitian(8);
        const PauliSum d = pauli_decompose(h, tol::hermitian, 0.0);
        CHECK(max_abs(to_dense(d) - h) < 1e-10);
    }
}

TEST_CASE("pauli sum round trips through text") {
    PauliSum h;
    h.qubits = 3;
    h.add(-1.0, "ZZI").add(0.25, "IXY").add(2.5, "III");
    const PauliSum back = pauli_sum_from_text(to_text(h));
    CHECK(max_abs(to_dense(back) - to_dense(h)) < 1e-14);
}

TEST_CASE("text parser reports line numbers") {
    CHECK_THROWS_WITH_AS(pauli_sum_from_text("1.0 ZZ\noops\n"),
                         doctest::Contains("line 2"), std::invalid_argument);
    CHECK_THROWS_AS(pauli_sum_from_text("1.0 ZQ\n"), std::invalid_argument);
}

TEST_CASE("locality measures the maximum weight") {
    PauliSum h;
    h.qubits = 2;
    h.add(1.0, "ZZ").add(-1.0, "ZI").add(1.0, "IZ");
    CHECK(locality(h) == 2);

    PauliSum three;
    three.qubits = 3;
    three.add(0.5, "ZXZ").add(1.0, "IXI");
    CHECK(locality(three) == 3);
}

TEST_CASE("triple decomposition of -8 XXX") {
    PauliSum v3;
    v3.qubits = 3;
    v3.add(-8.0, "XXX");
    const TripleDecomposition d = psd_triple_decompose(v3);
    REQUIRE(d.triples.size() == 1);
    CHECK(locality(d.y) <= 2);
    // each factor proportional to (1+X)/2
    for (int p = 0; p < 3; ++p) {
        const SpectrumReport rep = eig_hermitian(Matrix(d.triples[0].b[p]));
        CHECK(rep.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(rep.eigenvalues[1] > 0.0);
    }
    CHECK(max_abs(triple_reconstruction(d, 3) - to_dense(v3)) < 1e-9);
}

TEST_CASE("triple decomposition rejects non-3-local input") {
    PauliSum two;
    two.qubits = 3;
    two.add(1.0, "ZZI");
    CHECK_THROWS_AS(psd_triple_decompose(two), std::invalid_argument);
}

TEST_CASE("triple decomposition reconstructs random 3-local sums") {
    Rng rng(23);
    for (int t = 0; t < 1000; ++t) {
        const int n = 3 + static_cast<int>(rng.below(2));
        PauliSum v3 = random_sum(rng, n, 3, 4);
        if (locality(v3) != 3) continue;
        const TripleDecomposition d = psd_triple_decompose(v3);
        CHECK(locality(d.y) <= 2);
        for (const auto& tr : d.triples) {
            CHECK(tr.qubit[0] != tr.qubit[1]);
            CHECK(tr.qubit[1] != tr.qubit[2]);
            for (int p = 0; p < 3; ++p) {
                const SpectrumReport rep = eig_hermitian(Matrix(tr.b[p]));
                CHECK(rep.eigenvalues[0] >= -1e-10);
            }
        }
        CHECK(max_abs(triple_reconstruction(d, n) - to_dense(v3)) <
              1e-9 * std::max(1.0, max_abs(to_dense(v3))));
    }
}

TEST_CASE("normalize merges duplicates") {
    PauliSum h;
    h.qubits = 1;
    h.add(1.0, "Z").add(2.0, "Z").add(-3.0, "Z");
    h.normalize();
    CHECK(h.terms.empty());
}
