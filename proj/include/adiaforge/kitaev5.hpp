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

#include "adiaforge/circuit.hpp"
#include "adiaforge/local_hamiltonian.hpp"

namespace adiaforge {

/// Particle index of clock qubit m (1-based) behind n computation qubits.
inline int clock_particle(int n, int m) {
    return n + m - 1;
}

/// Sum over l = 1..L-1 of |01><01| on clock qubits (l, l+1).
HamiltonianSum clock_term(int L, int n = 0);

/// Sum over i of |1><1|_i (x) |0><0| on clock qubit 1.
HamiltonianSum input_term(int n, int L);

/// |1><1| on clock qubit 1.
HamiltonianSum clockinit_term(int L, int n = 0);

/// Four-term propagation operator H_l for gate U_l. Two clock qubits at the
/// boundaries l = 1 and l = L, three otherwise.
HamiltonianSum propagation_term(int l, const Gate &gate, int n, int L);

/// H_init = H_clockinit + H_input + H_clock,
/// H_final = 1/2 sum_l H_l + H_input + H_clock.
/// Circuits with a single gate get one identity appended.
AdiabaticProgram build_5local(const Circuit &circuit);

}  // namespace adiaforge
