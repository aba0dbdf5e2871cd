#pragma once

// History-state machinery: single-gate clock Hamiltonians, the PQR
// deformation family with PQ = R^2, the second-half sweep to a pure
// final state, and the L-gate forward/reverse holonomic cycle.

#include "qadia/circuit.hpp"
#include "qadia/evolution.hpp"
#include "qadia/types.hpp"

#include <vector>

namespace qadia {

struct PQRPoint {
    double p = 0.0, q = 0.0, r = 0.0;
};

// H = 0.5 (P I(x)|0><0|^c + Q I(x)|1><1|^c - R U(x)|1><0|^c - R U^+(x)|0><1|^c)
// on n computational qubits plus one clock qubit (most significant).
Matrix pqr_hamiltonian(const Matrix& u, int n, const PQRPoint& pt);

// H_ini = |1><1|^c, H_out = pqr at (1,1,1). H_out is a projector.
std::pair<Matrix, Matrix> single_gate_hamiltonians(const Matrix& u, int n);

struct SweepResult {
    QuantumState final_state;
    double fidelity = 0.0;
    double min_gap = 0.0;
};

// Sweep (1,1,1) -> (2,0,0) holding PQ = R^2, starting from the
// half-history state; lands on U|psi0> (x) |1>^c.
SweepResult half_cycle_sweep(const Matrix& u, const QuantumState& psi0_comp, double T, int steps);
// Validates the constraint on a supplied path before sweeping.
SweepResult half_cycle_sweep(const Matrix& u, const QuantumState& psi0_comp,
                             const std::vector<PQRPoint>& path, double T, int steps);

// Uniform (or weighted) superposition over the L+1 history stages with
// a unary clock of L qubits above the computational register.
QuantumState history_state(const Circuit& c, const std::vector<double>& weights = {});

// Unary-clock construction for the full circuit: H_i counts set clock
// bits, H_f = clock-validity penalty + per-gate propagation projectors
// (no input term, so the gauge freedom over the computational register
// is preserved). Desk scale: L <= 3, n <= 3.
std::pair<Matrix, Matrix> clock_hamiltonian(const Circuit& c);

// Clock-stage relabeling l -> L - l as a basis permutation.
Matrix clock_relabel_operator(int n, int L);

struct CycleResult {
    QuantumState final_state;
    double fidelity = 0.0;        // vs U_L..U_1|0> (x) |0>^c
    double leg_a_fidelity = 0.0;  // vs the forward history state
    double min_gap_leg_a = 0.0;   // gap above the degenerate ground band
    double min_gap_leg_b = 0.0;
};

// H_i -> H_f, clock relabel, H_f' -> H_i' with the reverse circuit.
CycleResult full_holonomic_cycle(const Circuit& c, double T, int steps);

} // namespace qadia
