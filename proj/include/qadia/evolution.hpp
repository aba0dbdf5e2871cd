#pragma once

// Time-dependent Schrodinger integration over a schedule with exact
// per-step exponentials of the midpoint Hamiltonian, plus the adiabatic
// transition-amplitude estimate.

#include "qadia/direct_map.hpp"
#include "qadia/types.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qadia {

using HamiltonianPath = std::function<Matrix(double)>; // s in [0,1] -> H

struct TracePoint {
    double t = 0.0;
    double s = 0.0;
    double gap = 0.0;
    double ground_fidelity = 0.0; // |P_ground psi|^2, degeneracy-aware
};

struct EvolutionResult {
    QuantumState final_state;
    std::vector<TracePoint> fidelity_trace;
    double total_time = 0.0;
    int steps = 0;
    double min_gap = 0.0;
};

struct EvolveOptions {
    int trace_points = 64;          // 0 disables the trace
    double ground_tol = tol::degeneracy;
    bool check_step_doubling = false;
    double step_doubling_tol = 1e-6;
};

// psi(T) via stepwise midpoint exponentials. steps >= 100. When
// check_step_doubling is set, the run is repeated at 2x steps and the
// final states must agree within step_doubling_tol.
EvolutionResult evolve(const HamiltonianPath& path, const QuantumState& psi0, double T, int steps,
                       const EvolveOptions& opts = {});
EvolutionResult evolve(const Schedule& sch, const QuantumState& psi0, double T, int steps,
                       const EvolveOptions& opts = {});

// Accumulated propagator of the whole path (dim is modest enough that a
// dense product is exact and reusable across initial states).
Matrix path_propagator(const HamiltonianPath& path, Eigen::Index dim, double T, int steps);

struct ErrorEstimate {
    std::vector<double> amplitudes;     // |<m,0| K_i |0,0>| for m != 0
    double alpha_times_T = 0.0;         // T-free bound on alpha * T (max |eig K_i|)
    double min_gap = 0.0;               // smallest E_m - E_0 at s = 0
    // |alpha / (E_m - E_0)|^2 at the smallest gap, times T^2
    double transition_bound_times_T2 = 0.0;

    double alpha_bound(double T) const { return alpha_times_T / T; }
    double transition_bound(double T) const { return transition_bound_times_T2 / (T * T); }
};

// Transition amplitudes of segment i in the s = 0 eigenframe.
ErrorEstimate adiabatic_error(const Schedule& sch, int segment);

struct RuntimeBound {
    double per_step_error; // eps / L^2
    double gap_scale;      // eps^3 / L^6
    double time_scale;     // L^12 / eps^6
};

RuntimeBound runtime_bound(int L, double eps);

// CSV with header t,s,gap,fidelity
std::string trace_to_csv(const EvolutionResult& r);

} // namespace qadia
