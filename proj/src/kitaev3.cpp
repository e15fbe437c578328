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

#include "adiaforge/kitaev3.hpp"

#include <cmath>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

#include "adiaforge/kitaev5.hpp"

namespace adiaforge {

namespace {

Matrix ketbra(int dim, int row, int col) {
    Matrix m = Matrix::Zero(dim, dim);
    m(row, col) = 1.0;
    return m;
}

}  // namespace

HamiltonianSum propagation_term_3(int l, const Gate &gate, int n, int L) {
    if (L < 2) throw ValidationError("clock needs L >= 2 (got " + std::to_string(L) + ")");
    if (l < 1 || l > L) {
        throw ValidationError("propagation_term_3: l=" + std::to_string(l) + " outside [1, " + std::to_string(L) +
                              "]");
    }
    gate.validate(n);
    const Matrix &U = gate.unitary;

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
    std::vector<int> clock_particles;
    for (int c : clocks) clock_particles.push_back(clock_particle(n, c));
    const int cdim = 1 << clocks.size();

    const Matrix hop = -Eigen::kroneckerProduct(U, ketbra(2, 1, 0)).eval() -
                       Eigen::kroneckerProduct(U.adjoint(), ketbra(2, 0, 1)).eval();
    std::vector<int> hop_particles = gate.targets;
    hop_particles.push_back(clock_particle(n, l));

    HamiltonianSum sum{n + L, 2, {}};
    sum.terms.push_back(make_term(clock_particles, ketbra(cdim, before, before), 2, 1.0, "prop_id"));
    sum.terms.push_back(make_term(hop_particles, hop, 2, 1.0, "prop"));
    sum.terms.push_back(make_term(clock_particles, ketbra(cdim, after, after), 2, 1.0, "prop_id"));
    return sum;
}

double default_penalty(double epsilon, int L, int l_exponent) {
    if (!(epsilon > 0.0 && epsilon <= 1.0)) {
        throw ValidationError("epsilon must lie in (0, 1]");
    }
    return std::pow(static_cast<double>(L), l_exponent) / (epsilon * epsilon);
}

double non_clock_norm_bound(const AdiabaticProgram &program) {
    auto keep = [](const std::string &label) { return label != "clock"; };
    return std::max(norm_bound(program.h_init.filter(keep)), norm_bound(program.h_final.filter(keep)));
}

AdiabaticProgram build_3local(const Circuit &circuit, const Kitaev3Options &options) {
    circuit.validate();
    const Circuit c = ensure_min_length(circuit);
    const int n = c.n;
    const int L = c.length();
    if (n + L > 62) {
        throw ValidationError("build_3local: n + L = " + std::to_string(n + L) + " exceeds 62 qubits");
    }
    if (options.l_exponent != 5 && options.l_exponent != 6) {
        throw ValidationError("build_3local: L exponent must be 5 or 6");
    }
    const double default_J = default_penalty(options.epsilon, L, options.l_exponent);
    const double J = options.J.value_or(default_J);

    AdiabaticProgram p;
    p.flavor = Flavor::ThreeLocal;
    p.n = n;
    p.L = L;
    p.L_original = circuit.length();
    p.circuit = c;
    p.epsilon = options.epsilon;
    p.J = J;
    p.h_init = HamiltonianSum{n + L, 2, {}};
    p.h_final = HamiltonianSum{n + L, 2, {}};

    const HamiltonianSum input = input_term(n, L);
    const HamiltonianSum clock = clock_term(L, n);
    p.h_init.append(clockinit_term(L, n));
    p.h_init.append(input);
    p.h_init.append(clock, J);
    for (int l = 1; l <= L; ++l) {
        p.h_final.append(propagation_term_3(l, c.gates[l - 1], n, L), 0.5);
    }
    p.h_final.append(input);
    p.h_final.append(clock, J);

    const double K = non_clock_norm_bound(p);
    if (!(J > 2.0 * K)) {
        std::ostringstream os;
        os << "build_3local: J = " << J << " must exceed 2K = " << 2.0 * K << " (leak-lemma hypothesis)";
        throw ValidationError(os.str());
    }
    return p;
}

}  // namespace adiaforge
