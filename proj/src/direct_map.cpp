#include "qadia/direct_map.hpp"

#include "qadia/operator_core.hpp"

#include <algorithm>
#include <cmath>

namespace qadia {

Matrix Schedule::interpolant(int i, double s_local) const {
    return unitary_exp(segments.at(i).generator, s_local);
}

Matrix Schedule::hamiltonian_segment(int i, double s_local) const {
    const ScheduleSegment& seg = segments.at(i);
    const Matrix u = interpolant(i, s_local);
    if (!trajectory) return u * seg.h_base * u.adjoint();
    RealVector levels(seg.base_eig.eigenvalues.size());
    for (Eigen::Index n = 0; n < levels.size(); ++n)
        levels[n] = (*trajectory)(static_cast<int>(n), s_local);
    const Matrix shaped = seg.base_eig.eigenvectors * levels.asDiagonal() *
                          seg.base_eig.eigenvectors.adjoint();
    return u * shaped * u.adjoint();
}

Matrix Schedule::hamiltonian(double s_global) const {
    if (segments.empty()) throw std::logic_error("empty schedule");
    if (s_global < 0.0 || s_global > 1.0)
        throw std::invalid_argument("schedule parameter must lie in [0,1]");
    const int L = segment_count();
    const double scaled = s_global * L;
    int i = std::min(static_cast<int>(scaled), L - 1);
    return hamiltonian_segment(i, scaled - i);
}

double GapProfile::min_gap() const { return *std::min_element(gap.begin(), gap.end()); }
double GapProfile::max_gap() const { return *std::max_element(gap.begin(), gap.end()); }

Matrix step_perturbation(const DenseOperator& h_prev, const Gate& gate, double s) {
    if (s < 0.0 || s > 1.0) throw std::invalid_argument("step_perturbation: s must lie in [0,1]");
    const int n = h_prev.qubits;
    const PauliSum decomp = pauli_decompose(h_prev);
    PauliSum parallel;
    parallel.qubits = n;
    for (const auto& term : decomp.terms) {
        bool overlaps = false;
        for (int q : gate.targets)
            if (term.letters[q - 1] != 'I') overlaps = true;
        if (overlaps) parallel.terms.push_back(term);
    }
    const Eigen::Index dim = h_prev.dim();
    if (parallel.terms.empty()) return Matrix::Zero(dim, dim);
    const Matrix hpar = to_dense(parallel);
    const Matrix k = kron_lift(principal_log(gate_matrix(gate)), gate.targets, n).m;
    const Matrix u = unitary_exp(k, s);
    return u * hpar * u.adjoint() - hpar;
}

Schedule assemble_schedule(const Circuit& c, const PauliSum& h0) {
    const int n = std::max(c.qubit_count, h0.qubits);
    if (h0.qubits != n)
        throw std::invalid_argument("assemble_schedule: H0 qubit count must cover the circuit");
    Schedule sch;
    sch.qubits = n;
    Matrix h = to_dense(h0);
    {
        const SpectrumReport rep = eig_hermitian(h);
        if (h.rows() > 1 && rep.gap <= 1e-8)
            throw std::invalid_argument("assemble_schedule: H0 ground state is degenerate");
    }
    auto push_segment = [&](const Gate& g) {
        ScheduleSegment seg;
        seg.h_base = h;
        seg.h_base_pauli = pauli_decompose(h);
        seg.gate = g;
        if (g.kind == GateKind::I) {
            seg.generator = Matrix::Zero(h.rows(), h.cols());
        } else {
            seg.generator = kron_lift(principal_log(gate_matrix(g)), g.targets, n).m;
        }
        seg.generator_pauli = pauli_decompose(seg.generator);
        seg.base_eig = eig_hermitian(h);
        sch.segments.push_back(std::move(seg));
    };
    if (c.gates.empty()) {
        Gate idle;
        idle.kind = GateKind::I;
        idle.targets = {1};
        push_segment(idle);
    } else {
        for (const auto& g : c.gates) {
            push_segment(g);
            const Matrix u = kron_lift(gate_matrix(g), g.targets, n).m;
            h = u * h * u.adjoint();
        }
    }
    sch.h_final = h;
    return sch;
}

GapProfile gap_profile(const Schedule& sch, int samples_per_segment) {
    if (samples_per_segment < 2)
        throw std::invalid_argument("gap_profile: need at least 2 samples per segment");
    GapProfile prof;
    const int L = sch.segment_count();
    for (int i = 0; i < L; ++i) {
        for (int k = 0; k < samples_per_segment; ++k) {
            const double s_local = static_cast<double>(k) / (samples_per_segment - 1);
            const Matrix hm = sch.hamiltonian_segment(i, s_local);
            prof.s.push_back((i + s_local) / L);
            prof.gap.push_back(eig_hermitian(hm).gap);
        }
    }
    return prof;
}

std::vector<int> locality_growth(const Schedule& sch) {
    std::vector<int> out;
    for (const auto& seg : sch.segments) out.push_back(locality(seg.h_base_pauli));
    out.push_back(locality(pauli_decompose(sch.h_final)));
    return out;
}

} // namespace qadia
