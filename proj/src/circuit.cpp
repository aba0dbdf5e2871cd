#include "qadia/circuit.hpp"

#include "qadia/kernels.hpp"
#include "qadia/operator_core.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace qadia {
namespace {

const std::map<std::string, GateKind>& name_table() {
    static const std::map<std::string, GateKind> t = {
        {"I", GateKind::I},   {"H", GateKind::H},   {"X", GateKind::X},
        {"Y", GateKind::Y},   {"Z", GateKind::Z},   {"S", GateKind::S},
        {"T", GateKind::T},   {"RX", GateKind::RX}, {"RY", GateKind::RY},
        {"RZ", GateKind::RZ}, {"CNOT", GateKind::CNOT}, {"CZ", GateKind::CZ},
        {"U2", GateKind::U2}};
    return t;
}

int gate_arity(GateKind k) {
    switch (k) {
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::U2: return 2;
    default: return 1;
    }
}

bool has_angle(GateKind k) {
    return k == GateKind::RX || k == GateKind::RY || k == GateKind::RZ;
}

[[noreturn]] void parse_fail(int lineno, const std::string& what) {
    throw std::invalid_argument("circuit line " + std::to_string(lineno) + ": " + what);
}

} // namespace

const char* gate_name(GateKind k) {
    for (const auto& [name, kind] : name_table())
        if (kind == k) return name.c_str();
    return "?";
}

Matrix gate_matrix(const Gate& g) {
    const Complex i{0.0, 1.0};
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Matrix m;
    switch (g.kind) {
    case GateKind::I: m = Matrix::Identity(2, 2); break;
    case GateKind::H:
        m.resize(2, 2);
        m << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2;
        break;
    case GateKind::X: m.resize(2, 2); m << 0, 1, 1, 0; break;
    case GateKind::Y: m.resize(2, 2); m << 0, -i, i, 0; break;
    case GateKind::Z: m.resize(2, 2); m << 1, 0, 0, -1; break;
    case GateKind::S: m.resize(2, 2); m << 1, 0, 0, i; break;
    case GateKind::T: m.resize(2, 2); m << 1, 0, 0, std::polar(1.0, M_PI / 4); break;
    case GateKind::RX:
        m.resize(2, 2);
        m << std::cos(g.angle / 2), -i * std::sin(g.angle / 2),
             -i * std::sin(g.angle / 2), std::cos(g.angle / 2);
        break;
    case GateKind::RY:
        m.resize(2, 2);
        m << std::cos(g.angle / 2), -std::sin(g.angle / 2),
             std::sin(g.angle / 2), std::cos(g.angle / 2);
        break;
    case GateKind::RZ:
        m.resize(2, 2);
        m << std::polar(1.0, -g.angle / 2), 0, 0, std::polar(1.0, g.angle / 2);
        break;
    case GateKind::CNOT:
        // control = gate bit 0 = targets[0]; flips gate bit 1
        m = Matrix::Identity(4, 4);
        m(1, 1) = 0; m(3, 3) = 0; m(1, 3) = 1; m(3, 1) = 1;
        break;
    case GateKind::CZ:
        m = Matrix::Identity(4, 4);
        m(3, 3) = -1;
        break;
    case GateKind::U2:
        if (g.custom.rows() != 4 || g.custom.cols() != 4)
            throw std::invalid_argument("U2 gate requires a 4x4 matrix");
        if (!is_unitary(g.custom))
            throw std::invalid_argument("U2 gate matrix is not unitary");
        m = g.custom;
        break;
    }
    return m;
}

Circuit parse_circuit(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    Circuit c;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string name;
        if (!(ls >> name)) continue;
        const auto it = name_table().find(name);
        if (it == name_table().end()) parse_fail(lineno, "unknown gate '" + name + "'");
        Gate g;
        g.kind = it->second;
        const int arity = gate_arity(g.kind);
        for (int k = 0; k < arity; ++k) {
            int q;
            if (!(ls >> q)) parse_fail(lineno, "expected qubit index");
            if (q < 1) parse_fail(lineno, "qubit indices are 1-based");
            g.targets.push_back(q);
        }
        if (has_angle(g.kind)) {
            if (!(ls >> g.angle)) parse_fail(lineno, "expected angle");
        }
        std::string extra;
        if (ls >> extra) parse_fail(lineno, "unexpected token '" + extra + "'");
        if (g.targets.size() == 2 && g.targets[0] == g.targets[1])
            parse_fail(lineno, "gate targets must be distinct");
        if (g.kind == GateKind::U2) {
            g.custom.resize(4, 4);
            for (int row = 0; row < 4; ++row) {
                if (!std::getline(is, line)) parse_fail(lineno, "U2 matrix block truncated");
                ++lineno;
                std::istringstream ms(line);
                for (int col = 0; col < 4; ++col) {
                    double re, im;
                    if (!(ms >> re >> im)) parse_fail(lineno, "U2 matrix row needs 8 numbers");
                    g.custom(row, col) = Complex{re, im};
                }
            }
            if (!is_unitary(g.custom)) parse_fail(lineno, "U2 matrix is not unitary");
        }
        for (int q : g.targets) c.qubit_count = std::max(c.qubit_count, q);
        c.gates.push_back(std::move(g));
    }
    return c;
}

std::string print_circuit(const Circuit& c) {
    std::ostringstream os;
    os.precision(17);
    for (const auto& g : c.gates) {
        os << gate_name(g.kind);
        for (int q : g.targets) os << " " << q;
        if (has_angle(g.kind)) os << " " << g.angle;
        os << "\n";
        if (g.kind == GateKind::U2) {
            for (int row = 0; row < 4; ++row) {
                for (int col = 0; col < 4; ++col) {
                    os << g.custom(row, col).real() << " " << g.custom(row, col).imag();
                    if (col != 3) os << " ";
                }
                os << "\n";
            }
        }
    }
    return os.str();
}

QuantumState apply_circuit(const Circuit& c, const QuantumState& psi) {
    if (c.qubit_count > psi.qubits)
        throw std::invalid_argument("apply_circuit: circuit touches qubits beyond the state");
    Vector amp = psi.amp;
    for (const auto& g : c.gates) {
        const Matrix m = gate_matrix(g);
        if (g.arity() == 1) {
            const Complex gm[4] = {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
            kernels::apply_1q(amp.data(), psi.qubits, g.targets[0], gm);
        } else {
            Complex gm[16];
            for (int r = 0; r < 4; ++r)
                for (int col = 0; col < 4; ++col) gm[4 * r + col] = m(r, col);
            kernels::apply_2q(amp.data(), psi.qubits, g.targets[0], g.targets[1], gm);
        }
    }
    return QuantumState(std::move(amp));
}

Matrix circuit_unitary(const Circuit& c, int n) {
    if (c.qubit_count > n)
        throw std::invalid_argument("circuit_unitary: circuit touches qubits beyond n");
    const Eigen::Index dim = Eigen::Index{1} << n;
    Matrix u = Matrix::Identity(dim, dim);
    for (const auto& g : c.gates)
        u = kron_lift(gate_matrix(g), g.targets, n).m * u;
    return u;
}

} // namespace qadia
