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

#include "adiaforge/kitaev5.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace adiaforge {

namespace {

Matrix ketbra(int dim, int row, int col) {
    Matrix m = Matrix::Zero(dim, dim);
    m(row, col) = 1.0;
    return m;
}

void check_clock_length(int L) {
    if (L < 2) {
        throw ValidationError("clock needs L >= 2 (got " + std::to_string(L) + ")");
    }
}

}  // namespace

HamiltonianSum clock_term(int L, int n) {
    check_clock_length(L);
    HamiltonianSum sum{n + L, 2, {}};
    for (int l = 1; l < L; ++l) {
        sum.terms.push_back(
            make_term({clock_particle(n, l), clock_particle(n, l + 1)}, ketbra(4, 0b01, 0b01), 2, 1.0, "clock"));
    }
    return sum;
}

HamiltonianSum input_term(int n, int L) {
    check_clock_length(L);
    if (n < 1) throw ValidationError("input_term: n must be >= 1");
    HamiltonianSum sum{n + L, 2, {}};
    for (int i = 0; i < n; ++i) {
        sum.terms.push_back(make_term({i, clock_particle(n, 1)}, ketbra(4, 0b10, 0b10), 2, 1.0, "input"));
    }
    return sum;
}

HamiltonianSum clockinit_term(int L, int n) {
    check_clock_length(L);
    HamiltonianSum sum{n + L, 2, {}};
    sum.terms.push_back(make_term({clock_particle(n, 1)}, ketbra(2, 1, 1), 2, 1.0, "clockinit"));
    return sum;
}

HamiltonianSum propagation_term(int l, const Gate &gate, int n, int L) {
    check_clock_length(L);
    if (l < 1 || l > L) {
        throw ValidationError("propagation_term: l=" + std::to_string(l) + " outside [1, " + std::to_string(L) + "]");
    }
    gate.validate(n);
    const Matrix &U = gate.unitary;
    const Matrix I = Matrix::Identity(U.rows(), U.cols());

    std::vector<int> clocks;
    int before = 0;
    int after = 0;
    if (l == 1) {
        clocks = {1, 2};
        before = 0b00;
        after = 0b10;
    } else if (l == L) {
        clocks = {L - 1, L};
        before = 0b10;
        after = 0b11;
    } else {
        clocks = {l - 1, l, l + 1};
        before = 0b100;
        after = 0b110;
    }
    const int cdim = 1 << clocks.size();
    const Matrix op = Eigen::kroneckerProduct(I, ketbra(cdim, before, before)).eval() -
                      Eigen::kroneckerProduct(U, ketbra(cdim, after, before)).eval() -
                      Eigen::kroneckerProduct(U.adjoint(), ketbra(cdim, before, after)).eval() +
                      Eigen::kroneckerProduct(I, ketbra(cdim, after, after)).eval();

    std::vector<int> particles = gate.targets;
    for (int c : clocks) particles.push_back(clock_particle(n, c));
    HamiltonianSum sum{n + L, 2, {}};
    sum.terms.push_back(make_term(particles, op, 2, 1.0, "prop"));
    return sum;
}

AdiabaticProgram build_5local(const Circuit &circuit) {
    circuit.validate();
    const Circuit c = ensure_min_length(circuit);
    const int n = c.n;
    const int L = c.length();
    if (n + L > 62) {
        throw ValidationError("build_5local: n + L = " + std::to_string(n + L) + " exceeds 62 qubits");
    }

    AdiabaticProgram p;
    p.flavor = Flavor::FiveLocal;
    p.n = n;
    p.L = L;
    p.L_original = circuit.length();
    p.circuit = c;
    p.h_init = HamiltonianSum{n + L, 2, {}};
    p.h_final = HamiltonianSum{n + L, 2, {}};

    const HamiltonianSum input = input_term(n, L);
    const HamiltonianSum clock = clock_term(L, n);
    p.h_init.append(clockinit_term(L, n));
    p.h_init.append(input);
    p.h_init.append(clock);
    for (int l = 1; l <= L; ++l) {
        p.h_final.append(propagation_term(l, c.gates[l - 1], n, L), 0.5);
    }
    p.h_final.append(input);
    p.h_final.append(clock);
    return p;
}

}  // namespace adiaforge
