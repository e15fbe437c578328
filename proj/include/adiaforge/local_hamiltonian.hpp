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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "adiaforge/circuit.hpp"
#include "adiaforge/sparse_vector.hpp"
#include "adiaforge/types.hpp"

namespace adiaforge {

/// coefficient * matrix acting on `support`, identity elsewhere. The matrix
/// index uses support[0] as the most significant digit.
struct LocalTerm {
    std::vector<int> support;
    Matrix matrix;
    double coefficient = 1.0;
    /// Free-form tag ("clock", "input", "clockinit", "prop", ...). Used to
    /// split a program into penalty and non-penalty parts.
    std::string label;

    int size() const {
        return static_cast<int>(support.size());
    }
};

/// Builds a term from an operator written on an arbitrary ordering of
/// distinct particles; the support is sorted and the matrix permuted to match.
LocalTerm make_term(const std::vector<int> &particles, const Matrix &op, int particle_dim, double coefficient,
                    std::string label);

struct HamiltonianSum {
    int particle_count = 0;
    int particle_dim = 2;
    std::vector<LocalTerm> terms;

    BasisIndex dimension() const;
    /// max support size over terms (0 for the empty sum).
    int locality() const;
    /// Support sorted, distinct and in range; matrix side d^|support| and
    /// Hermitian to 1e-12.
    void validate() const;

    void append(const HamiltonianSum &other, double scale = 1.0);
    /// Sub-sum of terms whose label satisfies the predicate.
    HamiltonianSum filter(const std::function<bool(const std::string &)> &keep) const;
};

enum class Flavor { FiveLocal, ThreeLocal, Grid };

std::string to_string(Flavor flavor);
Flavor flavor_from_string(const std::string &text);

/// (H_init, H_final) with the metadata needed to rebuild bases and to
/// interpret measurements.
struct AdiabaticProgram {
    Flavor flavor = Flavor::FiveLocal;
    HamiltonianSum h_init;
    HamiltonianSum h_final;
    int n = 0;
    int L = 0;
    /// Gate count before identity padding; measurement success means a
    /// clock reading of at least this value.
    int L_original = 0;
    std::optional<double> epsilon;
    std::optional<double> J;
    /// Round count for the grid flavor (0 otherwise).
    int R = 0;
    /// Circuit whose history state the program encodes (the layout circuit
    /// for the grid flavor).
    Circuit circuit;

    int locality() const;
    /// Same (N, d) on both sides and every term valid.
    void validate() const;
};

/// (1-s) H_init + s H_final with terms that appear identically on both sides
/// merged, so shared penalties keep total weight one.
HamiltonianSum interpolate(const AdiabaticProgram &program, double s);

/// Default assembly cap on the Hilbert-space dimension.
inline constexpr BasisIndex kAssemblyCap = BasisIndex{1} << 20;

/// Sum of coefficient * (term (x) identity) as a compressed sparse matrix.
SparseMatrix assemble(const HamiltonianSum &sum, BasisIndex cap = kAssemblyCap);

/// Dense assembly for small spaces (dim <= 4096).
Matrix assemble_dense(const HamiltonianSum &sum);

/// Matrix-free product.
Vector apply(const HamiltonianSum &sum, const Vector &v);

/// Matrix-free product on a sparse state.
SparseVector apply(const HamiltonianSum &sum, const SparseVector &v);

/// sum |c| * ||term||_2, an upper bound on the operator norm.
double norm_bound(const HamiltonianSum &sum);

/// Spectral norm of a Hermitian matrix (largest |eigenvalue|).
double hermitian_norm(const Matrix &m);

}  // namespace adiaforge
