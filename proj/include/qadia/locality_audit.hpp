#pragma once

// Entanglement-locality machinery: the spectral inequality relating
// ground-state overlap to the gap, GHZ degeneracy witnesses with and
// without ancillas, spectrum counting for conjugated 1-local
// Hamiltonians and the tensor-GHZ family bound.

#include "qadia/pauli.hpp"
#include "qadia/rng.hpp"
#include "qadia/types.hpp"

#include <optional>
#include <vector>

namespace qadia {

struct Theorem1Instance {
    Matrix h;        // Hermitian
    Vector psi;      // unit vector
    Matrix rho;      // density matrix with tr(rho h) = <psi|h|psi>
};

struct Theorem1Result {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
    double overlap_f = 0.0;   // |<psi|E0>|
    double e_tot = 0.0;       // E_max - E_min
};

// lhs = sum_{j>=1} (E_j - E_0) rho_{j+1} with rho eigenvalues sorted
// descending (largest weight on the smallest gap); rhs = (1-F^2) E_tot.
// Throws if tr(rho h) deviates from <psi|h|psi> beyond expectation_tol.
Theorem1Result theorem1_check(const Theorem1Instance& inst, double expectation_tol = 1e-8);

// Random valid instance on `qubits` qubits: the density matrix is mixed
// toward a spectral extreme until the expectation matches exactly.
Theorem1Instance random_theorem1_instance(Rng& rng, int qubits);

struct GhzWitnessReport {
    double expectation_gap = 0.0;   // |tr(rho H) - <GHZ|H|GHZ>|
    bool is_eigenstate = false;
    double eigen_residual = 0.0;    // ||H psi - <H> psi||
    double energy = 0.0;
    double partner_split = 0.0;     // |E(GHZ-) - E(GHZ+)|
    bool degenerate_partner = false;
};

// For k-local H with k <= n-1: the +/- GHZ pair is indistinguishable in
// expectation, and an exact GHZ eigenstate forces a degenerate partner.
GhzWitnessReport ghz_witness(const PauliSum& h, int n, double tol = 1e-8);

// Random k-local Hamiltonian on n qubits with an exact target
// eigenstate, sampled from the nullspace of the eigen-constraint.
PauliSum random_local_with_eigenstate(Rng& rng, int n, int k, const Vector& target);

struct AncillaWitnessReport {
    bool applicable = false;
    std::string status;
    int m = 0;                      // ancilla ground multiplicity
    int observed_ground_degeneracy = 0;
    bool forced_degeneracy_confirmed = false;  // >= 2m ground states
    double theorem_lhs = 0.0;
    double theorem_rhs = 0.0;
};

// Ancilla extension: candidate ground states |psi>|a_j>, j = 1..m. The
// mixed rho' = sum_j rho x |a_j><a_j| / m forces 2m-fold degeneracy.
AncillaWitnessReport ancilla_witness(const PauliSum& h, int n_comp, int m_expected,
                                     double tol = 1e-8);

struct SpectrumLine {
    double normalized_energy = 0.0; // j/n after affine [0,1] rescale
    long multiplicity = 0;
};

// Spectrum of U (sum sigma_z) U^+ : levels j/n with binomial
// multiplicities, cross-checked against a random conjugation.
std::vector<SpectrumLine> conjugated_spectrum(int n);

struct TensorGhzReport {
    int rank = 0;                        // family size 2^{n/3}
    double marginal_max_diff = 0.0;      // 2-qubit marginal spread across family
    double family_avg_gap = 0.0;         // mean energy above E0 over the family
    double avg_energy_bound = 0.0;       // (1-F^2) E_tot * r/(r-1)
    bool bound_holds = false;
    double delta = 0.0;
    double tightened_scale = 0.0;        // bound / n, reported not asserted
};

// Build the 2^{n/3} per-block sign family of 3-qubit GHZ blocks, verify
// 2-local indistinguishability, and evaluate the average-gap bound for
// a candidate 2-local Hamiltonian whose ground state is delta-close.
TensorGhzReport tensor_ghz_bound(int n, double delta, Rng& rng);

// GHZ_n = (|0..0> + |1..1>)/sqrt(2); the minus partner flips the sign.
Vector ghz_state(int n, double sign = 1.0);

} // namespace qadia
