#include "qadia/history.hpp"

#include "qadia/operator_core.hpp"

#include <cmath>

namespace qadia {
namespace {

// gap from the (possibly degenerate) ground band to the next level
double band_gap(const RealVector& evals, double tol = 1e-9) {
    const double e0 = evals[0];
    for (Eigen::Index j = 1; j < evals.size(); ++j)
        if (evals[j] - e0 > tol) return evals[j] - e0;
    return 0.0;
}

Eigen::Index unary_clock_index(int l) {
    return (Eigen::Index{1} << l) - 1; // 1^l as low bits
}

} // namespace

Matrix pqr_hamiltonian(const Matrix& u, int n, const PQRPoint& pt) {
    if (pt.p < 0 || pt.q < 0 || pt.r < 0)
        throw std::invalid_argument("pqr_hamiltonian: P, Q, R must be nonnegative");
    const Eigen::Index dc = Eigen::Index{1} << n;
    if (u.rows() != dc) throw std::invalid_argument("pqr_hamiltonian: gate dimension mismatch");
    const Eigen::Index dim = dc * 2;
    Matrix h = Matrix::Zero(dim, dim);
    h.block(0, 0, dc, dc) = 0.5 * pt.p * Matrix::Identity(dc, dc);
    h.block(dc, dc, dc, dc) = 0.5 * pt.q * Matrix::Identity(dc, dc);
    h.block(dc, 0, dc, dc) = -0.5 * pt.r * u;
    h.block(0, dc, dc, dc) = -0.5 * pt.r * u.adjoint();
    return h;
}

std::pair<Matrix, Matrix> single_gate_hamiltonians(const Matrix& u, int n) {
    const Eigen::Index dc = Eigen::Index{1} << n;
    const Eigen::Index dim = dc * 2;
    Matrix h_ini = Matrix::Zero(dim, dim);
    h_ini.block(dc, dc, dc, dc) = Matrix::Identity(dc, dc);
    return {h_ini, pqr_hamiltonian(u, n, {1.0, 1.0, 1.0})};
}

SweepResult half_cycle_sweep(const Matrix& u, const QuantumState& psi0_comp, double T, int steps) {
    std::vector<PQRPoint> path;
    const int knots = 129;
    for (int k = 0; k < knots; ++k) {
        const double th = 0.5 * M_PI * k / (knots - 1);
        path.push_back({1.0 + std::sin(th), 1.0 - std::sin(th), std::cos(th)});
    }
    return half_cycle_sweep(u, psi0_comp, path, T, steps);
}

SweepResult half_cycle_sweep(const Matrix& u, const QuantumState& psi0_comp,
                             const std::vector<PQRPoint>& path, double T, int steps) {
    const int n = psi0_comp.qubits;
    const Eigen::Index dc = psi0_comp.dim();
    if (path.size() < 2) throw std::invalid_argument("half_cycle_sweep: path too short");
    for (const auto& pt : path)
        if (std::abs(pt.p * pt.q - pt.r * pt.r) > 1e-10)
            throw std::invalid_argument("half_cycle_sweep: path violates PQ = R^2");

    // smooth interpolation between knots
    auto at = [&path](double s) {
        const double x = s * (path.size() - 1);
        const auto i = std::min(static_cast<std::size_t>(x), path.size() - 2);
        const double w = x - static_cast<double>(i);
        PQRPoint pt;
        pt.p = (1 - w) * path[i].p + w * path[i + 1].p;
        pt.q = (1 - w) * path[i].q + w * path[i + 1].q;
        pt.r = (1 - w) * path[i].r + w * path[i + 1].r;
        return pt;
    };

    // start from the half-history state (|psi>|0> + U|psi>|1>)/sqrt(2)
    Vector start(2 * dc);
    start.head(dc) = psi0_comp.amp / std::sqrt(2.0);
    start.tail(dc) = (u * psi0_comp.amp) / std::sqrt(2.0);
    const HamiltonianPath ham = [&](double s) { return pqr_hamiltonian(u, n, at(s)); };
    const EvolutionResult r = evolve(ham, QuantumState(start), T, steps);

    SweepResult out;
    Vector target = Vector::Zero(2 * dc);
    target.tail(dc) = u * psi0_comp.amp;
    out.fidelity = fidelity(target, r.final_state.amp);
    out.final_state = r.final_state;
    double min_gap = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 32; ++k) {
        const SpectrumReport rep = eig_hermitian(ham(static_cast<double>(k) / 32));
        min_gap = std::min(min_gap, band_gap(rep.eigenvalues));
    }
    out.min_gap = min_gap;
    return out;
}

QuantumState history_state(const Circuit& c, const std::vector<double>& weights) {
    const int n = c.qubit_count;
    const int L = c.depth();
    if (!weights.empty() && static_cast<int>(weights.size()) != L + 1)
        throw std::invalid_argument("history_state: need L+1 weights");
    const Eigen::Index dc = Eigen::Index{1} << n;
    Vector amp = Vector::Zero(dc << L);
    QuantumState stage = QuantumState::basis(n, 0);
    for (int l = 0; l <= L; ++l) {
        if (l > 0) {
            Circuit one;
            one.qubit_count = n;
            one.gates = {c.gates[l - 1]};
            stage = apply_circuit(one, stage);
        }
        const double w = weights.empty() ? 1.0 / std::sqrt(L + 1.0) : weights[l];
        amp.segment(unary_clock_index(l) * dc, dc) += w * stage.amp;
    }
    return QuantumState(std::move(amp), true);
}

namespace {

std::pair<Matrix, Matrix> clock_hamiltonian_impl(const std::vector<Matrix>& lifted, int n, int L) {
    const Eigen::Index dc = Eigen::Index{1} << n;
    const Eigen::Index dclock = Eigen::Index{1} << L;
    const Eigen::Index dim = dc << L;

    Matrix h_i = Matrix::Zero(dim, dim);
    for (Eigen::Index v = 0; v < dclock; ++v) {
        const int ones = __builtin_popcountll(static_cast<unsigned long long>(v));
        if (ones == 0) continue;
        for (Eigen::Index comp = 0; comp < dc; ++comp)
            h_i(v * dc + comp, v * dc + comp) = ones;
    }

    Matrix h_f = Matrix::Zero(dim, dim);
    // clock-validity penalty: a 0 before a 1 is illegal in unary
    for (Eigen::Index v = 0; v < dclock; ++v) {
        int bad = 0;
        for (int k = 0; k + 1 < L; ++k)
            if (((v >> k) & 1) == 0 && ((v >> (k + 1)) & 1) == 1) ++bad;
        if (bad == 0) continue;
        for (Eigen::Index comp = 0; comp < dc; ++comp)
            h_f(v * dc + comp, v * dc + comp) += bad;
    }
    // propagation projectors 0.5(P_{l-1} + P_l - U_l (x) raise - U_l^+ (x) lower)
    for (int l = 1; l <= L; ++l) {
        const Matrix& ul = lifted[l - 1];
        const Eigen::Index prev = unary_clock_index(l - 1) * dc;
        const Eigen::Index cur = unary_clock_index(l) * dc;
        h_f.block(prev, prev, dc, dc) += 0.5 * Matrix::Identity(dc, dc);
        h_f.block(cur, cur, dc, dc) += 0.5 * Matrix::Identity(dc, dc);
        h_f.block(cur, prev, dc, dc) -= 0.5 * ul;
        h_f.block(prev, cur, dc, dc) -= 0.5 * ul.adjoint();
    }
    return {h_i, h_f};
}

} // namespace

std::pair<Matrix, Matrix> clock_hamiltonian(const Circuit& c) {
    const int n = c.qubit_count;
    const int L = c.depth();
    if (L < 1 || L > 3 || n > 3)
        throw std::invalid_argument("clock_hamiltonian: desk scale is L in 1..3, n <= 3");
    std::vector<Matrix> lifted;
    for (const auto& g : c.gates) lifted.push_back(kron_lift(gate_matrix(g), g.targets, n).m);
    return clock_hamiltonian_impl(lifted, n, L);
}

Matrix clock_relabel_operator(int n, int L) {
    // stage l -> L - l: reverse clock qubit order, then flip every bit
    const Eigen::Index dc = Eigen::Index{1} << n;
    const Eigen::Index dclock = Eigen::Index{1} << L;
    Matrix perm = Matrix::Zero(dc << L, dc << L);
    for (Eigen::Index v = 0; v < dclock; ++v) {
        Eigen::Index rev = 0;
        for (int k = 0; k < L; ++k)
            if ((v >> k) & 1) rev |= Eigen::Index{1} << (L - 1 - k);
        const Eigen::Index target = rev ^ (dclock - 1);
        for (Eigen::Index comp = 0; comp < dc; ++comp)
            perm(target * dc + comp, v * dc + comp) = 1.0;
    }
    return perm;
}

CycleResult full_holonomic_cycle(const Circuit& c, double T, int steps) {
    const int n = c.qubit_count;
    const int L = c.depth();
    const auto [h_i, h_f] = clock_hamiltonian(c);

    // reverse circuit U_L^+, U_{L-1}^+, ...
    std::vector<Matrix> lifted_rev;
    for (int l = L - 1; l >= 0; --l)
        lifted_rev.push_back(
            kron_lift(gate_matrix(c.gates[l]), c.gates[l].targets, n).m.adjoint());
    const auto [h_i_rev, h_f_rev] = clock_hamiltonian_impl(lifted_rev, n, L);

    CycleResult res;
    const QuantumState psi_i = QuantumState::basis(n + L, 0);
    const HamiltonianPath leg_a = [&](double s) { return Matrix((1 - s) * h_i + s * h_f); };
    const EvolutionResult ra = evolve(leg_a, psi_i, T, steps);
    res.min_gap_leg_a = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 32; ++k) {
        const SpectrumReport rep = eig_hermitian(leg_a(static_cast<double>(k) / 32));
        res.min_gap_leg_a = std::min(res.min_gap_leg_a, band_gap(rep.eigenvalues));
    }
    res.leg_a_fidelity = fidelity(history_state(c).amp, ra.final_state.amp);

    const Matrix relabel = clock_relabel_operator(n, L);
    const QuantumState mid(Vector(relabel * ra.final_state.amp));

    const HamiltonianPath leg_b = [&](double s) { return Matrix((1 - s) * h_f_rev + s * h_i_rev); };
    const EvolutionResult rb = evolve(leg_b, mid, T, steps);
    res.min_gap_leg_b = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 32; ++k) {
        const SpectrumReport rep = eig_hermitian(leg_b(static_cast<double>(k) / 32));
        res.min_gap_leg_b = std::min(res.min_gap_leg_b, band_gap(rep.eigenvalues));
    }

    Vector target = Vector::Zero(psi_i.dim());
    target.head(Eigen::Index{1} << n) = apply_circuit(c, QuantumState::basis(n, 0)).amp;
    res.fidelity = fidelity(target, rb.final_state.amp);
    res.final_state = rb.final_state;
    return res;
}

} // namespace qadia
