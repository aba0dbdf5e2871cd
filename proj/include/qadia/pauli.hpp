#pragma once

// Symbolic k-local layer: weighted Pauli strings, dense round trips and
// the positive-semidefinite triple factorization of 3-local terms.

#include "qadia/types.hpp"

#include <string>
#include <vector>

namespace qadia {

// letters[i] is the Pauli on qubit i+1, one of I X Y Z.
struct PauliTerm {
    double coeff = 0.0;
    std::string letters;

    int weight() const {
        int w = 0;
        for (char c : letters)
            if (c != 'I') ++w;
        return w;
    }
};

struct PauliSum {
    std::vector<PauliTerm> terms;
    int qubits = 0;

    PauliSum() = default;
    PauliSum(std::vector<PauliTerm> t, int n);

    // merge duplicate letter strings, drop negligible coefficients
    void normalize(double drop_tol = 1e-14);

    double coeff_of(const std::string& letters) const;
    PauliSum& add(double coeff, const std::string& letters);
};

PauliSum operator+(const PauliSum& a, const PauliSum& b);
PauliSum operator*(double s, const PauliSum& p);

// max term weight (0 for an empty or identity-only sum)
int locality(const PauliSum& h);

Matrix to_dense(const PauliSum& h);
Matrix pauli_string_dense(const std::string& letters);

// Coefficients via the normalized trace inner product tr(P M)/2^n.
// Throws on non-Hermitian input.
PauliSum pauli_decompose(const Matrix& op, double herm_tol = tol::hermitian, double drop_tol = 1e-12);
PauliSum pauli_decompose(const DenseOperator& op, double herm_tol = tol::hermitian, double drop_tol = 1e-12);

// Text form: one "coeff LETTERS" line per term, qubit 1 leftmost.
std::string to_text(const PauliSum& h);
PauliSum pauli_sum_from_text(const std::string& text);

// One PSD commuting triple per 3-local basis term of the decomposition
// v3 = Y - 6 * sum_m B_{m1} B_{m2} B_{m3}.
struct GadgetTriple {
    int qubit[3];                 // distinct supports, 1-based
    Eigen::Matrix2cd b[3];        // PSD single-qubit factors
    double scale = 1.0;           // multiplies the -6 B1 B2 B3 product
    std::string source_letters;   // originating Pauli string
    double source_coeff = 0.0;
};

struct TripleDecomposition {
    PauliSum y;                       // locality <= 2 remainder
    std::vector<GadgetTriple> triples;
};

// Requires locality(v3) == 3. Positive coefficients are rewritten with
// -(1-s1)(1+s2)(1+s3)/8 products, negative ones with (1+s1)(1+s2)(1+s3)/8,
// the sign flip fixed on the first qubit of the term.
TripleDecomposition psd_triple_decompose(const PauliSum& v3);

// Dense reconstruction Y - 6 sum scale * B1 B2 B3 on n qubits.
Matrix triple_reconstruction(const TripleDecomposition& d, int n);

} // namespace qadia
