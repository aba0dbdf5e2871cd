#pragma once

// Gap-preserving compilation of a circuit into a piecewise conjugated
// Hamiltonian schedule: per-gate generators K_i, interpolants
// exp(i s K_i), perturbations V(s_i) and eigenvalue-trajectory control.

#include "qadia/circuit.hpp"
#include "qadia/pauli.hpp"
#include "qadia/types.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace qadia {

// f(level n, local s) -> eigenvalue; the default trajectory keeps E_n.
using EigenTrajectory = std::function<double(int, double)>;

struct ScheduleSegment {
    Matrix h_base;            // H^{(i-1)}
    PauliSum h_base_pauli;
    Matrix generator;         // K_i
    PauliSum generator_pauli;
    Gate gate;
    SpectrumReport base_eig;  // eigenframe of h_base (for custom trajectories)
};

struct Schedule {
    std::vector<ScheduleSegment> segments;
    int qubits = 0;
    Matrix h_final;
    std::optional<EigenTrajectory> trajectory;

    int segment_count() const { return static_cast<int>(segments.size()); }

    // H at global s in [0,1]; segments share the interval uniformly.
    Matrix hamiltonian(double s_global) const;
    Matrix hamiltonian_segment(int i, double s_local) const;
    // exp(i s K_i)
    Matrix interpolant(int i, double s_local) const;
};

struct GapProfile {
    std::vector<double> s;    // global parameter
    std::vector<double> gap;  // E1 - E0
    double min_gap() const;
    double max_gap() const;
};

// V(s) = U(s) (sum of h-terms overlapping the gate) U(s)^+ - same sum.
// With the default trajectory this equals U(s) H U(s)^+ - H.
Matrix step_perturbation(const DenseOperator& h_prev, const Gate& gate, double s);

// Build the full schedule from H0 (must have a unique ground state,
// gap > 1e-8). The final Hamiltonian is (prod U_i) H0 (prod U_i)^+.
Schedule assemble_schedule(const Circuit& c, const PauliSum& h0);

GapProfile gap_profile(const Schedule& sch, int samples_per_segment);

// locality of H^{(i)} for i = 0..L via Pauli decomposition
std::vector<int> locality_growth(const Schedule& sch);

} // namespace qadia
