#include "qadia/holonomy.hpp"

#include "qadia/operator_core.hpp"

#include <cmath>

namespace qadia {
namespace {

Matrix polar_unitary(const Matrix& m) {
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

} // namespace

double geometric_phase(const VectorPath& path, int steps) {
    if (steps < 2) throw std::invalid_argument("geometric_phase: need at least 2 steps");
    Complex prod{1.0, 0.0};
    Vector prev = path(0.0);
    for (int k = 1; k <= steps; ++k) {
        Vector cur = path(static_cast<double>(k) / steps);
        prod *= Complex((prev.adjoint() * cur)(0, 0));
        prev = std::move(cur);
    }
    if (std::abs(prod) < 1e-12)
        throw std::runtime_error("geometric_phase: overlap product vanished (path too coarse)");
    return -std::arg(prod);
}

double geometric_phase_of_level(const HamiltonianPath& ham, int level, int steps,
                                const Vector& anchor_start, const Vector& anchor_end,
                                double gap_tol) {
    Complex prod{1.0, 0.0};
    Vector prev = anchor_start;
    for (int k = 1; k < steps; ++k) {
        const double s = static_cast<double>(k) / steps;
        const SpectrumReport rep = eig_hermitian(ham(s));
        const Eigen::Index n = rep.eigenvalues.size();
        const double below = level > 0 ? rep.eigenvalues[level] - rep.eigenvalues[level - 1]
                                       : std::numeric_limits<double>::infinity();
        const double above = level + 1 < n ? rep.eigenvalues[level + 1] - rep.eigenvalues[level]
                                           : std::numeric_limits<double>::infinity();
        if (std::min(below, above) < gap_tol)
            throw std::runtime_error("geometric_phase: level crossing at s = " + std::to_string(s));
        Vector cur = rep.eigenvectors.col(level);
        prod *= Complex((prev.adjoint() * cur)(0, 0));
        prev = std::move(cur);
    }
    prod *= Complex((prev.adjoint() * anchor_end)(0, 0));
    if (std::abs(prod) < 1e-12)
        throw std::runtime_error("geometric_phase: overlap product vanished (path too coarse)");
    return -std::arg(prod);
}

PhaseCancellationPlan phase_cancellation_plan(const PauliSum& h0, const Gate& gate, double T,
                                              int phase_steps) {
    if (T <= 0.0) throw std::invalid_argument("phase_cancellation_plan: T must be positive");
    if (locality(h0) > 1)
        throw std::invalid_argument("phase_cancellation_plan: H0 must be 1-local");
    const int n = h0.qubits;
    PhaseCancellationPlan plan;
    plan.total_time = T;
    plan.h0 = to_dense(h0);
    {
        const SpectrumReport rep = eig_hermitian(plan.h0);
        const double norm = std::max(std::abs(rep.eigenvalues[0]),
                                     std::abs(rep.eigenvalues[rep.eigenvalues.size() - 1]));
        if (norm > 1.0 + 1e-12)
            throw std::invalid_argument("phase_cancellation_plan: ||H0|| must be at most 1");
        for (Eigen::Index j = 1; j < rep.eigenvalues.size(); ++j)
            if (rep.eigenvalues[j] - rep.eigenvalues[j - 1] < 1e-9)
                throw std::invalid_argument("phase_cancellation_plan: H0 is degenerate");
    }
    plan.gate = kron_lift(gate_matrix(gate), gate.targets, n).m;
    plan.generator = kron_lift(principal_log(gate_matrix(gate)), gate.targets, n).m;

    const Eigen::Index dim = plan.h0.rows();
    const Matrix k = plan.generator;
    plan.step2 = [h0m = plan.h0, k](double s) {
        const Matrix u = unitary_exp(k, s);
        return Matrix(0.5 * (Matrix::Identity(h0m.rows(), h0m.cols()) + u * h0m * u.adjoint()));
    };

    // per-level geometric phase of the conjugated family, anchored at
    // |n> and U|n> (H0 is diagonal in the computational basis here only
    // if built that way; use its eigenframe)
    const SpectrumReport h0rep = eig_hermitian(plan.h0);
    Matrix g_diag = Matrix::Zero(dim, dim);
    for (Eigen::Index lvl = 0; lvl < dim; ++lvl) {
        const Vector start = h0rep.eigenvectors.col(lvl);
        const Vector end = plan.gate * start;
        // level lvl of 0.5(I + U H0 U^+) follows U(s)|n_lvl>: the
        // eigenvalues are s-independent, so the index never reorders
        const double gamma = geometric_phase_of_level(plan.step2, static_cast<int>(lvl),
                                                      phase_steps, start, end);
        plan.gammas.push_back(gamma);
        g_diag += gamma * (start * start.adjoint());
    }
    plan.g_op = g_diag;
    plan.step4_h = plan.gate *
                   (0.5 * (Matrix::Identity(dim, dim) - plan.h0) + plan.g_op / T) *
                   plan.gate.adjoint();
    return plan;
}

QuantumState run_phase_cancellation(const PhaseCancellationPlan& plan, const QuantumState& psi,
                                    int steps) {
    const EvolutionResult leg = evolve(plan.step2, psi, plan.total_time, steps,
                                       EvolveOptions{.trace_points = 0});
    // step 4 is time-independent: one exact exponential
    const SpectrumReport rep = eig_hermitian(plan.step4_h);
    Vector phases(rep.eigenvalues.size());
    for (Eigen::Index j = 0; j < phases.size(); ++j)
        phases[j] = std::polar(1.0, -rep.eigenvalues[j] * plan.total_time);
    Vector out = rep.eigenvectors * phases.asDiagonal() *
                 (rep.eigenvectors.adjoint() * leg.final_state.amp);
    return QuantumState(std::move(out));
}

Matrix holonomic_cnot_x() {
    const Complex ipi{0.0, M_PI};
    Matrix a = Matrix::Zero(4, 4);
    a(0, 0) = 2.0 * ipi;
    a(1, 1) = 2.0 * ipi;
    a(2, 2) = ipi; a(2, 3) = ipi;
    a(3, 2) = ipi; a(3, 3) = ipi;
    Matrix b = Matrix::Zero(4, 4);
    b(2, 3) = -ipi / std::sqrt(2.0);
    b(3, 3) = ipi / std::sqrt(2.0);
    Matrix x = Matrix::Zero(8, 8);
    x.block(0, 0, 4, 4) = a;
    x.block(0, 4, 4, 4) = b;
    x.block(4, 0, 4, 4) = -b.adjoint();
    if (max_abs(x + Matrix(x.adjoint())) > 1e-12)
        throw std::logic_error("holonomic_cnot: X is not anti-Hermitian");
    return x;
}

HamiltonianPath holonomic_cnot_path(double e0, double e1) {
    const Matrix x = holonomic_cnot_x();
    return [x, e0, e1](double t) {
        // e^{tX} is unitary; exponentiate iK with K = -i t X Hermitian
        const Matrix k = Complex{0.0, -1.0} * (t * x);
        const Matrix u = unitary_exp(k, 1.0);
        Matrix p0 = Matrix::Zero(8, 8), p1 = Matrix::Zero(8, 8);
        p0.block(0, 0, 4, 4) = Matrix::Identity(4, 4);
        p1.block(4, 4, 4, 4) = Matrix::Identity(4, 4);
        return Matrix(e1 * u * p1 * u.adjoint() + e0 * u * p0 * u.adjoint());
    };
}

HolonomicCnotResult holonomic_cnot(double T, int steps) {
    HolonomicCnotResult res;
    const Matrix x = holonomic_cnot_x();
    const Matrix ex = unitary_exp(Matrix(Complex{0.0, -1.0} * x), 1.0);
    Matrix p0 = Matrix::Zero(8, 8);
    p0.block(0, 0, 4, 4) = Matrix::Identity(4, 4);
    res.cycle_closure = max_abs(ex * p0 * ex.adjoint() - p0);

    const HamiltonianPath path = holonomic_cnot_path();
    const Matrix u = path_propagator(path, 8, T, steps);
    res.effective = u.block(0, 0, 4, 4); // V0^+ U V0: ancilla ground block

    Matrix cnot = Matrix::Identity(4, 4);
    cnot(2, 2) = 0; cnot(3, 3) = 0; cnot(2, 3) = 1; cnot(3, 2) = 1;
    res.fidelity = std::abs((res.effective.adjoint() * cnot).trace()) / 4.0;

    double min_gap = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 16; ++k) {
        const SpectrumReport rep = eig_hermitian(path(static_cast<double>(k) / 16));
        min_gap = std::min(min_gap, rep.eigenvalues[4] - rep.eigenvalues[3]);
    }
    res.min_band_gap = min_gap;
    return res;
}

HolonomyFrame wilczek_zee_holonomy(const HamiltonianPath& ham, int rank, int steps,
                                   const Matrix& frame_start, const Matrix& frame_end) {
    if (rank < 1) throw std::invalid_argument("wilczek_zee_holonomy: rank must be positive");
    HolonomyFrame out;
    out.min_gap = std::numeric_limits<double>::infinity();
    Matrix moving = frame_start;
    for (int k = 1; k <= steps; ++k) {
        const double s = static_cast<double>(k) / steps;
        const SpectrumReport rep = eig_hermitian(ham(s));
        if (rep.eigenvalues.size() > rank)
            out.min_gap = std::min(out.min_gap, rep.eigenvalues[rank] - rep.eigenvalues[rank - 1]);
        if (rep.eigenvalues.size() > rank &&
            rep.eigenvalues[rank] - rep.eigenvalues[rank - 1] < 1e-10)
            throw std::runtime_error("wilczek_zee_holonomy: subspace dimension change at s = " +
                                     std::to_string(s));
        const Matrix frame = rep.eigenvectors.leftCols(rank);
        // project onto the new subspace, then re-unitarize (polar)
        const Matrix overlap = frame.adjoint() * moving;   // rank x rank
        moving = frame * polar_unitary(overlap);
    }
    const Matrix w_raw = frame_end.adjoint() * moving;
    out.unitarity = max_abs(Matrix(w_raw.adjoint() * w_raw) - Matrix::Identity(rank, rank));
    out.w = polar_unitary(w_raw);
    return out;
}

} // namespace qadia
