#pragma once

// Gate/circuit representation, the line-format parser and the
// statevector simulator used as oracle for every evolution test.

#include "qadia/types.hpp"

#include <string>
#include <vector>

namespace qadia {

enum class GateKind { I, H, X, Y, Z, S, T, RX, RY, RZ, CNOT, CZ, U2 };

struct Gate {
    GateKind kind = GateKind::I;
    std::vector<int> targets;     // 1-based; CNOT is {control, target}
    double angle = 0.0;           // RX/RY/RZ only
    Matrix custom;                // U2 only, 4x4

    int arity() const { return static_cast<int>(targets.size()); }
};

struct Circuit {
    std::vector<Gate> gates;
    int qubit_count = 0;

    int depth() const { return static_cast<int>(gates.size()); }
};

// 2x2 or 4x4 unitary for a gate; gate bit k corresponds to targets[k].
Matrix gate_matrix(const Gate& g);

const char* gate_name(GateKind k);

// Line format: "<GATE> <q> [<q2>] [<angle>]", '#' starts a comment.
// A U2 line is followed by four rows of eight numbers (re im x 4).
// Errors carry 1-based line numbers.
Circuit parse_circuit(const std::string& text);
std::string print_circuit(const Circuit& c);

// Apply the circuit to a state (dimensions must match). Norm is
// preserved to 1e-12.
QuantumState apply_circuit(const Circuit& c, const QuantumState& psi);

// Dense product U_L ... U_1 lifted to n qubits.
Matrix circuit_unitary(const Circuit& c, int n);

} // namespace qadia
