// Copyright 2026 The adiaforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "adiaforge/types.hpp"

namespace adiaforge {

/// A one- or two-qubit gate. For two-qubit gates targets[0] is the more
/// significant bit of the local 4x4 index.
struct Gate {
    std::string name;
    std::vector<int> targets;
    Matrix unitary;

    int arity() const {
        return static_cast<int>(targets.size());
    }
    /// Throws ValidationError unless the gate is unitary to 1e-12 and its
    /// targets are distinct and inside [0, n).
    void validate(int n) const;
    bool is_identity(double tol = 1e-14) const;
};

namespace gates {
Gate X(int q);
Gate H(int q);
Gate I(int q);
Gate CNOT(int control, int target);
Gate SWAP(int a, int b);
Gate custom(std::vector<int> targets, Matrix unitary, std::string name = "custom");
/// Two-qubit identity on (a, b).
Gate I2(int a, int b);
}  // namespace gates

struct Circuit {
    int n = 0;
    std::vector<Gate> gates;

    int length() const {
        return static_cast<int>(gates.size());
    }
    /// L >= 1 and every gate valid for n.
    void validate() const;
};

/// alpha(0..L): the state after each prefix of the circuit.
struct CircuitStateTrace {
    std::vector<Vector> states;
};

/// Applies a gate in place to an n-qubit state vector (qubit 0 is the most
/// significant bit of the amplitude index).
void apply_gate(const Gate &gate, int n, Vector &state);

/// Computational basis state |j> on n qubits.
Vector basis_state(int n, BasisIndex j);

/// Propagates |j> (default |0^n>) through the circuit.
CircuitStateTrace simulate(const Circuit &circuit, BasisIndex input = 0);

/// Index of the unary clock state |1^l 0^(L-l)> on L clock qubits.
BasisIndex clock_index(int l, int L);

/// Largest n + L accepted by history_state.
inline constexpr int kHistoryQubitCap = 24;

/// (L+1)^(-1/2) sum_l alpha(l) (x) |1^l 0^(L-l)>, computation qubits first.
Vector history_state(const Circuit &circuit);

/// Number of identity gates appended by pad_identities: ceil((2/eps - 1) L).
int padding_count(int L, double epsilon);

/// Appends ceil((2/eps - 1) L) identity gates. eps must lie in (0, 1].
Circuit pad_identities(const Circuit &circuit, double epsilon);

/// Pads circuits with L < 2 by one identity gate; builders need two clock
/// qubits for the boundary propagation terms.
Circuit ensure_min_length(const Circuit &circuit);

/// Circuit laid out in R rounds of 2n gates: gate 1 is a one-qubit gate on
/// qubit 0, gate i (2 <= i <= n) acts on (i-2, i-1), gates n+1..2n are
/// identities on qubits n-1 down to 0 (all indices 0-based here).
struct GridLayoutCircuit {
    int n = 0;
    int R = 0;
    std::vector<Gate> gates;

    int length() const {
        return 2 * n * R;
    }
    /// Throws ValidationError when the round structure is violated.
    void validate() const;
    Circuit to_circuit() const;
};

/// Greedy nearest-neighbour routing into the round layout. Swaps are
/// inserted to bring operands together; a trailing sort restores the
/// original qubit order, so the final states agree without relabeling.
GridLayoutCircuit to_grid_layout(const Circuit &circuit);

/// Appends `rounds` identity rounds.
GridLayoutCircuit pad_identity_rounds(const GridLayoutCircuit &circuit, int rounds);

}  // namespace adiaforge
