#include "qadia/gadget.hpp"

#include "qadia/operator_core.hpp"

#include <algorithm>
#include <cmath>

namespace qadia {
namespace {

PauliSum pad_to(const PauliSum& p, int n_total) {
    PauliSum out;
    out.qubits = n_total;
    for (const auto& t : p.terms) {
        std::string letters = t.letters;
        letters.resize(n_total, 'I');
        out.terms.push_back({t.coeff, std::move(letters)});
    }
    return out;
}

// append coeff * (2x2 op on `qubit`) [* X on x_qubit] as Pauli terms
void add_single_qubit_op(PauliSum& sum, const Eigen::Matrix2cd& op, int qubit, double coeff,
                         int x_qubit = 0) {
    const Complex i{0.0, 1.0};
    const double c_i = 0.5 * (op(0, 0) + op(1, 1)).real();
    const double c_x = 0.5 * (op(0, 1) + op(1, 0)).real();
    const double c_y = 0.5 * ((op(0, 1) - op(1, 0)) * i).real();
    const double c_z = 0.5 * (op(0, 0) - op(1, 1)).real();
    const char letters[4] = {'I', 'X', 'Y', 'Z'};
    const double coeffs[4] = {c_i, c_x, c_y, c_z};
    for (int k = 0; k < 4; ++k) {
        if (std::abs(coeffs[k]) < 1e-15) continue;
        std::string s(sum.qubits, 'I');
        s[qubit - 1] = letters[k];
        if (x_qubit > 0) s[x_qubit - 1] = 'X';
        sum.terms.push_back({coeff * coeffs[k], std::move(s)});
    }
}

} // namespace

Matrix GadgetizedHamiltonian::h_anc_dense() const { return to_dense(h_anc); }
Matrix GadgetizedHamiltonian::v_prime_dense() const { return to_dense(v_prime); }

Matrix GadgetizedHamiltonian::total_dense() const {
    Matrix m = h_anc_dense() + v_prime_dense();
    if (!base.terms.empty()) m += to_dense(pad_to(base, n_total()));
    return m;
}

std::vector<Eigen::Index> GadgetizedHamiltonian::low_space_indices() const {
    const int m_triples = static_cast<int>(triples.size());
    const Eigen::Index dc = Eigen::Index{1} << n_comp;
    std::vector<Eigen::Index> idx;
    for (Eigen::Index e = 0; e < (Eigen::Index{1} << m_triples); ++e) {
        std::size_t anc = 0;
        for (int m = 0; m < m_triples; ++m)
            if ((e >> m) & 1) anc |= std::size_t{7} << (3 * m);
        for (Eigen::Index c = 0; c < dc; ++c)
            idx.push_back(c + (static_cast<Eigen::Index>(anc) << n_comp));
    }
    return idx;
}

Matrix GadgetizedHamiltonian::h_eff_low() const {
    const int m_triples = static_cast<int>(triples.size());
    const int n_low = n_comp + m_triples;  // one effective qubit per triple
    const Eigen::Index dim = Eigen::Index{1} << n_low;
    // (base + Y) (x) identity on the effective qubits
    Matrix m = Matrix::Zero(dim, dim);
    if (!base.terms.empty()) m += to_dense(pad_to(base, n_low));
    m += to_dense(pad_to(y, n_low));
    for (int t = 0; t < m_triples; ++t) {
        const GadgetTriple& tr = triples[t];
        Matrix prod = kron_lift(tr.b[0], {tr.qubit[0]}, n_low).m *
                      kron_lift(tr.b[1], {tr.qubit[1]}, n_low).m *
                      kron_lift(tr.b[2], {tr.qubit[2]}, n_low).m;
        Eigen::Matrix2cd x;
        x << 0, 1, 1, 0;
        m -= 6.0 * tr.scale * prod * kron_lift(x, {n_comp + t + 1}, n_low).m;
    }
    return m;
}

GadgetizedHamiltonian build_gadget(const PauliSum& v3, const TripleDecomposition& decomp,
                                   double delta, const PauliSum& base) {
    if (delta <= 0.0 || delta >= 1.0)
        throw std::invalid_argument("build_gadget: delta must lie in (0,1)");
    const int n_comp = v3.qubits;
    {
        const Matrix recon = triple_reconstruction(decomp, n_comp);
        if (max_abs(recon - to_dense(v3)) > 1e-9 * std::max(1.0, max_abs(to_dense(v3))))
            throw std::invalid_argument("build_gadget: decomposition does not reconstruct v3");
    }
    GadgetizedHamiltonian g;
    g.n_comp = n_comp;
    g.delta = delta;
    g.triples = decomp.triples;
    g.base = base;
    g.y = decomp.y;
    const int n_total = g.n_total();
    const double pen = std::pow(delta, -3.0) / 4.0;

    g.h_anc.qubits = n_total;
    const int m_triples = static_cast<int>(g.triples.size());
    for (int m = 0; m < m_triples; ++m) {
        const int a1 = g.anc_qubit(m, 0), a2 = g.anc_qubit(m, 1), a3 = g.anc_qubit(m, 2);
        auto zz = [&](int p, int q) {
            std::string s(n_total, 'I');
            s[p - 1] = 'Z';
            s[q - 1] = 'Z';
            return s;
        };
        g.h_anc.add(-pen, zz(a1, a2));
        g.h_anc.add(-pen, zz(a1, a3));
        g.h_anc.add(-pen, zz(a2, a3));
        g.h_anc.add(3.0 * pen, std::string(n_total, 'I'));
    }
    g.h_anc.normalize();

    g.v_prime = pad_to(decomp.y, n_total);
    const double inv_d = 1.0 / delta;
    const double inv_d2 = inv_d * inv_d;
    for (int m = 0; m < m_triples; ++m) {
        const GadgetTriple& tr = g.triples[m];
        for (int p = 0; p < 3; ++p) {
            const Eigen::Matrix2cd b2 = tr.b[p] * tr.b[p];
            add_single_qubit_op(g.v_prime, b2, tr.qubit[p], inv_d);
            add_single_qubit_op(g.v_prime, tr.b[p], tr.qubit[p], -inv_d2, g.anc_qubit(m, p));
        }
    }
    g.v_prime.normalize();
    if (locality(g.v_prime) > 2)
        throw std::runtime_error("build_gadget: coupling Hamiltonian exceeds 2-locality");
    return g;
}

SelfEnergyReport self_energy_exact(const GadgetizedHamiltonian& g, double z) {
    const Matrix h = g.total_dense();
    const double scale = std::max(1.0, max_abs(h));
    {
        Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
            if (std::abs(es.eigenvalues()[i] - z) < 1e-9 * scale)
                throw std::runtime_error("self_energy_exact: probe z at resonance");
    }
    const Eigen::Index dim = h.rows();
    const Matrix green = (z * Matrix::Identity(dim, dim) - h).partialPivLu().inverse();
    const auto sel = g.low_space_indices();
    const auto nl = static_cast<Eigen::Index>(sel.size());
    Matrix gmm(nl, nl);
    for (Eigen::Index i = 0; i < nl; ++i)
        for (Eigen::Index j = 0; j < nl; ++j) gmm(i, j) = green(sel[i], sel[j]);
    const Matrix gmm_inv = gmm.partialPivLu().inverse();
    if (max_abs(gmm * gmm_inv - Matrix::Identity(nl, nl)) > 1e-6)
        throw std::runtime_error("self_energy_exact: singular low-space restriction");
    SelfEnergyReport rep;
    rep.z = z;
    rep.sigma_minus = z * Matrix::Identity(nl, nl) - gmm_inv;
    const Matrix diff = rep.sigma_minus - g.h_eff_low();
    rep.deviation = diff.jacobiSvd().singularValues()[0];
    return rep;
}

namespace {

struct SeriesBlocks {
    Matrix vmm, vmp, vpm, vpp;
    Vector r_diag;  // (z - H_anc)^{-1} on the high space (H_anc diagonal)
};

SeriesBlocks series_blocks(const GadgetizedHamiltonian& g, double z) {
    const Matrix hanc = g.h_anc_dense();
    Matrix v = g.v_prime_dense();
    if (!g.base.terms.empty()) v += to_dense(pad_to(g.base, g.n_total()));
    const auto sel = g.low_space_indices();
    std::vector<bool> is_low(static_cast<std::size_t>(v.rows()), false);
    for (auto i : sel) is_low[static_cast<std::size_t>(i)] = true;
    std::vector<Eigen::Index> selp;
    for (Eigen::Index i = 0; i < v.rows(); ++i)
        if (!is_low[static_cast<std::size_t>(i)]) selp.push_back(i);
    const auto nl = static_cast<Eigen::Index>(sel.size());
    const auto nh = static_cast<Eigen::Index>(selp.size());
    SeriesBlocks b;
    b.vmm.resize(nl, nl);
    b.vmp.resize(nl, nh);
    b.vpm.resize(nh, nl);
    b.vpp.resize(nh, nh);
    for (Eigen::Index i = 0; i < nl; ++i)
        for (Eigen::Index j = 0; j < nl; ++j) b.vmm(i, j) = v(sel[i], sel[j]);
    for (Eigen::Index i = 0; i < nl; ++i)
        for (Eigen::Index j = 0; j < nh; ++j) b.vmp(i, j) = v(sel[i], selp[j]);
    for (Eigen::Index i = 0; i < nh; ++i)
        for (Eigen::Index j = 0; j < nl; ++j) b.vpm(i, j) = v(selp[i], sel[j]);
    for (Eigen::Index i = 0; i < nh; ++i)
        for (Eigen::Index j = 0; j < nh; ++j) b.vpp(i, j) = v(selp[i], selp[j]);
    b.r_diag.resize(nh);
    for (Eigen::Index i = 0; i < nh; ++i)
        b.r_diag[i] = 1.0 / (z - hanc(selp[i], selp[i]).real());

    const double vnorm = v.jacobiSvd().singularValues()[0];
    const double gap = std::pow(g.delta, -3.0);
    if (vnorm >= gap)
        throw std::runtime_error("self_energy_series: ||V|| exceeds the penalty gap, series diverges");
    return b;
}

} // namespace

Matrix self_energy_series_term(const GadgetizedHamiltonian& g, double z, int order) {
    if (order < 1 || order > 4)
        throw std::invalid_argument("self_energy_series: order must be 1..4");
    const SeriesBlocks b = series_blocks(g, z);
    if (order == 1) return b.vmm;
    Matrix rhs = b.r_diag.asDiagonal() * b.vpm;
    for (int k = 3; k <= order; ++k) rhs = b.r_diag.asDiagonal() * (b.vpp * rhs);
    return b.vmp * rhs;
}

Matrix self_energy_series(const GadgetizedHamiltonian& g, double z, int order) {
    if (order < 1 || order > 4)
        throw std::invalid_argument("self_energy_series: order must be 1..4");
    Matrix acc = self_energy_series_term(g, z, 1);
    for (int k = 2; k <= order; ++k) acc += self_energy_series_term(g, z, k);
    return acc;
}

SpectrumComparison compare_lower_spectra(const Matrix& h3_full, const GadgetizedHamiltonian& g,
                                         int k_levels) {
    const Eigen::Index dc = Eigen::Index{1} << g.n_comp;
    if (h3_full.rows() != dc)
        throw std::invalid_argument("compare_lower_spectra: target dimension mismatch");
    if (k_levels < 1 || k_levels > dc)
        throw std::invalid_argument("compare_lower_spectra: bad level count");
    const SpectrumReport target = eig_hermitian(h3_full);
    const Matrix total = g.total_dense();
    const SpectrumReport gad = eig_hermitian(total);

    SpectrumComparison cmp;
    for (int j = 0; j < k_levels; ++j) {
        const double d = std::abs(gad.eigenvalues[j] - target.eigenvalues[j]);
        cmp.level_deviation.push_back(d);
        cmp.max_deviation = std::max(cmp.max_deviation, d);
    }

    const Vector ground = gad.eigenvectors.col(0);
    const DenseOperator rho_full{Matrix(ground * ground.adjoint())};
    std::vector<int> comp_qubits;
    for (int q = 1; q <= g.n_comp; ++q) comp_qubits.push_back(q);
    const Matrix rho_comp = partial_trace(rho_full, comp_qubits).m;
    const Vector target_ground = target.eigenvectors.col(0);
    cmp.comp_ground_fidelity = (target_ground.adjoint() * rho_comp * target_ground).real();

    const Vector ghz3 = [] {
        Vector v = Vector::Zero(8);
        v[0] = v[7] = 1.0 / std::sqrt(2.0);
        return v;
    }();
    cmp.anc_ghz_fidelity = 1.0;
    for (int m = 0; m < static_cast<int>(g.triples.size()); ++m) {
        const std::vector<int> anc = {g.anc_qubit(m, 0), g.anc_qubit(m, 1), g.anc_qubit(m, 2)};
        const Matrix rho_anc = partial_trace(rho_full, anc).m;
        const double f = (ghz3.adjoint() * rho_anc * ghz3).real();
        cmp.anc_ghz_fidelity = std::min(cmp.anc_ghz_fidelity, f);
    }
    return cmp;
}

double self_energy_grid_deviation(const GadgetizedHamiltonian& g, double e0, int points) {
    double worst = 0.0;
    int used = 0;
    for (int k = 0; k < points; ++k) {
        const double z = e0 - 1.0 + 2.0 * k / (points - 1);
        try {
            worst = std::max(worst, self_energy_exact(g, z).deviation);
            ++used;
        } catch (const std::runtime_error&) {
            // resonance; skip this probe
        }
    }
    if (used == 0) throw std::runtime_error("self_energy_grid_deviation: all probes at resonance");
    return worst;
}

std::vector<double> repeated_gadget_gap(int steps, double delta) {
    if (steps < 0 || steps > 3)
        throw std::invalid_argument("repeated_gadget_gap: steps must be 0..3");
    // base instance: a conjugated 3-local target on 3 computational qubits
    PauliSum h0;
    h0.qubits = 3;
    h0.add(-0.9, "ZII").add(-0.1, "IXZ").add(-0.5, "IIZ");
    PauliSum target;
    target.qubits = 3;
    target.add(-0.9, "ZII").add(-0.5, "IIZ").add(0.1, "IXZ").add(-0.1, "ZXZ");
    // target = CZ(1,2) h0 CZ(1,2): the IXZ term picks up a Z1 partner
    Matrix current = to_dense(target);
    int qubits = 3;

    std::vector<double> gaps;
    auto norm_gap = [](const Matrix& h) {
        const SpectrumReport rep = eig_hermitian(h);
        const double span = rep.eigenvalues[rep.eigenvalues.size() - 1] - rep.eigenvalues[0];
        return span > 0 ? rep.gap / span : 0.0;
    };
    gaps.push_back(norm_gap(current));

    for (int level = 0; level < steps; ++level) {
        if (qubits + 3 > 12)
            throw std::runtime_error("repeated_gadget_gap: dimension overflow guard (> 12 qubits)");
        // 3-local term to reduce: at level 0 the conjugation residue, at
        // deeper levels a term straddling an ancilla of the previous layer
        PauliSum v3;
        v3.qubits = qubits;
        std::string letters(qubits, 'I');
        if (level == 0) {
            letters[0] = 'Z';
            letters[1] = 'X';
            letters[2] = 'Z';
        } else {
            letters[0] = 'Z';
            letters[1] = 'X';
            letters[3 * level + 1] = 'X'; // first ancilla of the previous layer
        }
        const SpectrumReport cur = eig_hermitian(current);
        const double span = cur.eigenvalues[cur.eigenvalues.size() - 1] - cur.eigenvalues[0];
        const double c = -0.1 * span;
        v3.add(c, letters);

        const TripleDecomposition dec = psd_triple_decompose(v3);
        GadgetizedHamiltonian g = build_gadget(v3, dec, delta);
        // splice: current Hamiltonian minus the reduced term, plus the
        // gadget pieces on the enlarged register (scaled into its units)
        const Eigen::Index dim_new = Eigen::Index{1} << (qubits + 3);
        Matrix next = Matrix::Zero(dim_new, dim_new);
        {
            Matrix embedded = Matrix::Zero(dim_new, dim_new);
            const Eigen::Index dold = current.rows();
            for (Eigen::Index a = 0; a < dim_new / dold; ++a)
                embedded.block(a * dold, a * dold, dold, dold) = current;
            next += embedded;
        }
        next -= to_dense(pad_to(v3, qubits + 3));          // replaced by the gadget
        next += g.h_anc_dense() + g.v_prime_dense();       // v_prime carries Y
        qubits += 3;
        current = next;
        gaps.push_back(norm_gap(current));
    }
    return gaps;
}

} // namespace qadia
