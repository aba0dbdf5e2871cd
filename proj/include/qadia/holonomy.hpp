#pragma once

// Dynamical/geometric phase bookkeeping, the 4-step partially adiabatic
// gate algorithm with phase cancellation, the optimal-control holonomic
// CNOT and Wilczek-Zee transport over degenerate subspaces.

#include "qadia/evolution.hpp"
#include "qadia/pauli.hpp"
#include "qadia/types.hpp"

#include <functional>
#include <vector>

namespace qadia {

// Path of eigenvectors for one level, endpoints authoritative for the
// gauge: the first and last vectors anchor the open-path phase.
using VectorPath = std::function<Vector(double)>; // s in [0,1]

// gamma = -arg prod_k <n(s_k)|n(s_{k+1})>, discrete parallel transport.
// Intermediate gauge choices cancel; only the endpoint frames matter.
double geometric_phase(const VectorPath& path, int steps);

// Instantaneous eigenvectors of H(s) at `level`, phase-aligned by
// continuity, endpoints anchored to the supplied frames. Aborts if the
// gap around the level falls below gap_tol.
double geometric_phase_of_level(const HamiltonianPath& ham, int level, int steps,
                                const Vector& anchor_start, const Vector& anchor_end,
                                double gap_tol = 1e-10);

struct PhaseCancellationPlan {
    Matrix h0;                 // diagonalized 1-local start Hamiltonian
    Matrix gate;               // lifted target unitary
    Matrix generator;          // K = -i log U
    Matrix g_op;               // G|n> = gamma_n |n> in the H0 eigenbasis
    Matrix step4_h;            // U (0.5(I - H0) + G/T) U^+
    HamiltonianPath step2;     // 0.5(I + U(s) H0 U(s)^+)
    double total_time = 0.0;
    std::vector<double> gammas;
};

// Steps 1-4 for a two-qubit gate: pick H0 (1-local, norm <= 1,
// nondegenerate on the gate support), sweep the conjugated projector
// family, compute per-level geometric phases, build the canceling
// step-4 Hamiltonian.
PhaseCancellationPlan phase_cancellation_plan(const PauliSum& h0, const Gate& gate, double T,
                                              int phase_steps = 2000);

// Execute the plan on a state: step-2 evolution then the exact step-4
// exponential. Returns the final state (should match gate * psi up to a
// global phase).
QuantumState run_phase_cancellation(const PhaseCancellationPlan& plan, const QuantumState& psi,
                                    int steps);

struct HolonomicCnotResult {
    Matrix effective;          // 4x4, ancilla ground band, dynamical phase removed
    double fidelity = 0.0;     // |tr(W^+ CNOT)| / 4
    double cycle_closure = 0.0; // ||e^X P0 e^-X - P0||_max
    double min_band_gap = 0.0;
};

// The printed optimal-control generator blocks.
Matrix holonomic_cnot_x();
// H(t) = E1 e^{tX} V1 V1^+ e^{-tX} + E0 e^{tX} V0 V0^+ e^{-tX}, E0 = 0, E1 = 1.
HamiltonianPath holonomic_cnot_path(double e0 = 0.0, double e1 = 1.0);

HolonomicCnotResult holonomic_cnot(double T, int steps);

struct HolonomyFrame {
    Matrix w;                  // unitary on the subspace
    double unitarity = 0.0;    // ||W^+ W - I||_max before the final polar step
    double min_gap = 0.0;      // gap above the transported subspace
};

// Discrete path-ordered Wilczek-Zee transport of the `rank`-dimensional
// lowest band of H(s), with polar re-unitarization every step. The
// result maps start-frame coordinates to coordinates in `frame_end`.
HolonomyFrame wilczek_zee_holonomy(const HamiltonianPath& ham, int rank, int steps,
                                   const Matrix& frame_start, const Matrix& frame_end);

} // namespace qadia
