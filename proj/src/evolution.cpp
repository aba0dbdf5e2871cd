#include "qadia/evolution.hpp"

#include "qadia/kernels.hpp"
#include "qadia/operator_core.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace qadia {
namespace {

// psi <- V diag(exp(-i E dt)) V^+ psi through the kernel layer
void spectral_step(const SpectrumReport& rep, double dt, Vector& psi, Vector& scratch) {
    const auto n = static_cast<std::size_t>(psi.size());
    kernels::matvec_adj(rep.eigenvectors.data(), psi.data(), scratch.data(), n);
    Vector phases(psi.size());
    for (Eigen::Index k = 0; k < psi.size(); ++k)
        phases[k] = std::polar(1.0, -rep.eigenvalues[k] * dt);
    kernels::cmul_inplace(phases.data(), scratch.data(), n);
    kernels::matvec(rep.eigenvectors.data(), scratch.data(), psi.data(), n);
}

double ground_overlap(const SpectrumReport& rep, const Vector& psi, double tol) {
    const int deg = ground_degeneracy(rep.eigenvalues, tol);
    double acc = 0.0;
    for (int j = 0; j < deg; ++j) {
        const Complex ov = rep.eigenvectors.col(j).adjoint() * psi;
        acc += std::norm(ov);
    }
    return acc;
}

EvolutionResult evolve_once(const HamiltonianPath& path, const QuantumState& psi0, double T,
                            int steps, const EvolveOptions& opts) {
    Vector psi = psi0.amp;
    Vector scratch(psi.size());
    EvolutionResult res;
    res.total_time = T;
    res.steps = steps;
    res.min_gap = std::numeric_limits<double>::infinity();
    const double dt = T / steps;
    const int stride = opts.trace_points > 0 ? std::max(1, steps / opts.trace_points) : steps + 1;
    for (int k = 0; k < steps; ++k) {
        const double s_mid = (k + 0.5) / steps;
        const SpectrumReport rep = eig_hermitian(path(s_mid));
        spectral_step(rep, dt, psi, scratch);
        res.min_gap = std::min(res.min_gap, rep.eigenvalues[std::min<Eigen::Index>(
                                                1, rep.eigenvalues.size() - 1)] -
                                                rep.eigenvalues[0]);
        if (opts.trace_points > 0 && (k % stride == 0 || k == steps - 1)) {
            const double s_end = static_cast<double>(k + 1) / steps;
            const SpectrumReport rep_end = eig_hermitian(path(s_end));
            TracePoint tp;
            tp.t = (k + 1) * dt;
            tp.s = s_end;
            tp.gap = rep_end.eigenvalues.size() > 1
                         ? rep_end.eigenvalues[1] - rep_end.eigenvalues[0]
                         : 0.0;
            tp.ground_fidelity = ground_overlap(rep_end, psi, opts.ground_tol);
            res.fidelity_trace.push_back(tp);
        }
    }
    const double nrm = std::sqrt(kernels::norm2(psi.data(), static_cast<std::size_t>(psi.size())));
    if (std::abs(nrm - 1.0) > 1e-9)
        throw std::runtime_error("evolve: norm drift " + std::to_string(std::abs(nrm - 1.0)));
    psi /= nrm;
    res.final_state = QuantumState(std::move(psi));
    return res;
}

} // namespace

EvolutionResult evolve(const HamiltonianPath& path, const QuantumState& psi0, double T, int steps,
                       const EvolveOptions& opts) {
    if (T <= 0.0) throw std::invalid_argument("evolve: T must be positive");
    if (steps < 100) throw std::invalid_argument("evolve: steps must be at least 100");
    if (std::abs(psi0.amp.norm() - 1.0) > tol::norm)
        throw std::invalid_argument("evolve: initial state is not normalized");
    EvolutionResult res = evolve_once(path, psi0, T, steps, opts);
    if (opts.check_step_doubling) {
        EvolveOptions quiet = opts;
        quiet.trace_points = 0;
        quiet.check_step_doubling = false;
        const EvolutionResult fine = evolve_once(path, psi0, T, 2 * steps, quiet);
        const double diff = (fine.final_state.amp - res.final_state.amp).norm();
        if (diff > opts.step_doubling_tol)
            throw std::runtime_error("evolve: step-doubling check failed, difference " +
                                     std::to_string(diff) + "; increase steps");
    }
    return res;
}

EvolutionResult evolve(const Schedule& sch, const QuantumState& psi0, double T, int steps,
                       const EvolveOptions& opts) {
    return evolve([&sch](double s) { return sch.hamiltonian(s); }, psi0, T, steps, opts);
}

Matrix path_propagator(const HamiltonianPath& path, Eigen::Index dim, double T, int steps) {
    Matrix u = Matrix::Identity(dim, dim);
    const double dt = T / steps;
    for (int k = 0; k < steps; ++k) {
        const double s_mid = (k + 0.5) / steps;
        const SpectrumReport rep = eig_hermitian(path(s_mid));
        Vector phases(dim);
        for (Eigen::Index j = 0; j < dim; ++j)
            phases[j] = std::polar(1.0, -rep.eigenvalues[j] * dt);
        u = rep.eigenvectors * phases.asDiagonal() * rep.eigenvectors.adjoint() * u;
    }
    return u;
}

ErrorEstimate adiabatic_error(const Schedule& sch, int segment) {
    if (segment < 0 || segment >= sch.segment_count())
        throw std::invalid_argument("adiabatic_error: no such segment");
    const ScheduleSegment& seg = sch.segments[segment];
    const SpectrumReport& rep = seg.base_eig;
    if (rep.eigenvalues.size() > 1 && rep.gap <= tol::degeneracy)
        throw std::invalid_argument("adiabatic_error: degenerate ground state at s = 0");
    ErrorEstimate est;
    const Vector k_ground = seg.generator * rep.eigenvectors.col(0);
    for (Eigen::Index m = 1; m < rep.eigenvalues.size(); ++m) {
        const Complex amp = rep.eigenvectors.col(m).adjoint() * k_ground;
        est.amplitudes.push_back(std::abs(amp));
    }
    const SpectrumReport krep = eig_hermitian(seg.generator);
    est.alpha_times_T = std::max(std::abs(krep.eigenvalues[0]),
                                 std::abs(krep.eigenvalues[krep.eigenvalues.size() - 1]));
    est.min_gap = rep.gap;
    est.transition_bound_times_T2 =
        rep.gap > 0.0 ? (est.alpha_times_T / rep.gap) * (est.alpha_times_T / rep.gap) : 0.0;
    return est;
}

RuntimeBound runtime_bound(int L, double eps) {
    if (L < 1) throw std::invalid_argument("runtime_bound: L must be >= 1");
    if (eps <= 0.0 || eps > 1.0) throw std::invalid_argument("runtime_bound: eps must lie in (0,1]");
    const double l = static_cast<double>(L);
    return {eps / (l * l), std::pow(eps, 3) / std::pow(l, 6), std::pow(l, 12) / std::pow(eps, 6)};
}

std::string trace_to_csv(const EvolutionResult& r) {
    std::ostringstream os;
    os.precision(17);
    os << "t,s,gap,fidelity\n";
    for (const auto& tp : r.fidelity_trace)
        os << tp.t << "," << tp.s << "," << tp.gap << "," << tp.ground_fidelity << "\n";
    return os.str();
}

} // namespace qadia
