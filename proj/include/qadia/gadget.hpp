#pragma once

// Three-qubit gadget: ancilla penalty Hamiltonian, 2-local coupling
// synthesis, exact and series self-energy, and lower-spectrum closeness
// certification of the 2-local approximation.

#include "qadia/pauli.hpp"
#include "qadia/types.hpp"

#include <vector>

namespace qadia {

// Qubit layout: computational 1..n_comp, then ancillas grouped per
// triple, (triple m, position p) -> n_comp + 3m + p.
struct GadgetizedHamiltonian {
    int n_comp = 0;
    double delta = 0.0;
    std::vector<GadgetTriple> triples;
    PauliSum h_anc;     // penalty, 2-local, spectrum {0 x2, delta^-3 x6} per triple
    PauliSum v_prime;   // Y + delta^-1 B^2 - delta^-2 B (x) sigma_x couplings, <= 2-local
    PauliSum y;         // the 2-local remainder of the reduced term
    PauliSum base;      // optional computational-only part carried along

    int n_total() const { return n_comp + 3 * static_cast<int>(triples.size()); }
    int anc_qubit(int triple, int pos) const { return n_comp + 3 * triple + pos + 1; }

    Matrix h_anc_dense() const;
    Matrix v_prime_dense() const;
    Matrix total_dense() const;   // h_anc + base + v_prime
    // effective target on the low space: (base + Y) (x) I - 6 sum B1B2B3 (x) Xeff
    Matrix h_eff_low() const;
    // basis indices of the low space of h_anc (ancillas in {|000>,|111>}
    // per triple), ordered ancilla-configuration major
    std::vector<Eigen::Index> low_space_indices() const;
};

// Assemble the gadget for (Y, triples) = psd_triple_decompose(v3).
// `base` is an optional 2-local computational Hamiltonian included in
// the total (the H(0) the step perturbation was added to).
GadgetizedHamiltonian build_gadget(const PauliSum& v3, const TripleDecomposition& decomp,
                                   double delta, const PauliSum& base = {});

struct SelfEnergyReport {
    double z = 0.0;
    Matrix sigma_minus;   // on the low space
    double deviation = 0.0; // operator norm distance to h_eff_low
};

// Resolvent route: Sigma_-(z) = z I - [Gtilde(z) restricted to the low
// space of H_anc]^{-1}. Throws at resonance (z within tol of an
// eigenvalue of the total Hamiltonian).
SelfEnergyReport self_energy_exact(const GadgetizedHamiltonian& g, double z);

// Perturbative partial sum up to `order` (1..4):
//   V-- + V-+ R V+- + V-+ R V++ R V+- + ...,  R = (z - H_anc,++)^{-1}.
// Throws if ||V|| >= the penalty gap.
Matrix self_energy_series(const GadgetizedHamiltonian& g, double z, int order);
// Single order-k increment of the series (for structure checks).
Matrix self_energy_series_term(const GadgetizedHamiltonian& g, double z, int order);

struct SpectrumComparison {
    double max_deviation = 0.0;           // over the lowest k levels
    std::vector<double> level_deviation;
    double comp_ground_fidelity = 0.0;    // traced-ancilla overlap with target ground
    double anc_ghz_fidelity = 0.0;        // per-triple GHZ+ overlap of the ancilla factor
};

// Compare the lowest k eigenvalues of the gadgetized Hamiltonian
// against the 3-local target (dimension 2^n_comp).
SpectrumComparison compare_lower_spectra(const Matrix& h3_full, const GadgetizedHamiltonian& g,
                                         int k_levels);

// Max ||Sigma_-(z) - H_eff|| over a z grid across [E0-1, E0+1],
// skipping resonances.
double self_energy_grid_deviation(const GadgetizedHamiltonian& g, double e0, int points = 21);

// Nested gadgetization at matched penalty scales; returns the
// span-normalized ground gap after 0..steps reductions (steps <= 3,
// total qubits capped at 12).
std::vector<double> repeated_gadget_gap(int steps, double delta);

} // namespace qadia
