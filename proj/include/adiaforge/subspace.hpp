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

#include <vector>

#include "adiaforge/circuit.hpp"
#include "adiaforge/local_hamiltonian.hpp"
#include "adiaforge/sparse_vector.hpp"

namespace adiaforge {

/// Orthonormal vectors stored sparsely on the program space.
struct SubspaceBasis {
    BasisIndex dimension = 0;
    std::vector<SparseVector> vectors;

    int size() const {
        return static_cast<int>(vectors.size());
    }
    /// Columns as a dense matrix (dimension <= 2^16).
    Matrix dense() const;
    /// max |<b_i|b_j> - delta_ij|.
    double orthonormality_error() const;
    /// Coefficients c -> sum_i c_i b_i.
    SparseVector lift(const Vector &coefficients) const;
};

struct RestrictedOperator {
    SubspaceBasis basis;
    Matrix matrix;  // B^dag H B
};

enum class SubspaceMode { Full, S, S0 };

std::string to_string(SubspaceMode mode);
SubspaceMode subspace_mode_from_string(const std::string &text);

/// gamma^j_l = U_l...U_1|j> (x) |1^l 0^(L-l)> for l = 0..L on n + L qubits.
std::vector<SparseVector> gamma_basis_5local(const Circuit &circuit, BasisIndex j);

/// gamma^j_0..gamma^j_L for any flavor.
std::vector<SparseVector> gamma_basis(const AdiabaticProgram &program, BasisIndex j);

/// Global basis index of clock value l (or legal shape l) with computational
/// basis state x on the active qubits.
BasisIndex legal_index(const AdiabaticProgram &program, int l, BasisIndex x);

/// S0 = span{gamma^0_l}; S = span{gamma^j_l} for all j, ordered j-major.
SubspaceBasis subspace_basis(const AdiabaticProgram &program, SubspaceMode mode);

/// (1/sqrt(L+1)) sum_l gamma^0_l.
SparseVector history_state(const AdiabaticProgram &program);

/// Analytic ground state of h_init: gamma^0_0.
SparseVector initial_state(const AdiabaticProgram &program);

RestrictedOperator restrict(const HamiltonianSum &sum, const SubspaceBasis &basis);
RestrictedOperator restrict(const Matrix &H, const Matrix &basis);

/// ||(I - BB^dag) H B||_2.
double invariance_residual(const HamiltonianSum &sum, const SubspaceBasis &basis);
double invariance_residual(const Matrix &H, const Matrix &basis);

struct BlockDecomposition {
    std::vector<RestrictedOperator> blocks;  // one per j
    double off_block_norm = 0.0;             // largest |<gamma^j|H|gamma^j'>|, j != j'
};

BlockDecomposition block_decompose_S(const AdiabaticProgram &program, double s);

}  // namespace adiaforge
