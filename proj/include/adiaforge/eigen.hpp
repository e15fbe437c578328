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

#include "adiaforge/types.hpp"

namespace adiaforge {

inline constexpr double kDegeneracyTol = 1e-8;
inline constexpr double kResidualTol = 1e-9;
inline constexpr Eigen::Index kDenseSolverCap = 4096;

struct Spectrum {
    RealVector eigenvalues;  // ascending
    Matrix eigenvectors;     // columns, phase fixed; empty when not requested
    RealVector residuals;    // ||H v - lambda v|| per pair (when vectors exist)
    double ground = 0.0;
    double gap = 0.0;  // 0 when degenerate or fewer than two values
    bool degenerate = false;
    int iterations = 0;  // 0 for the dense path
};

/// Rotates v so its largest-magnitude entry is real positive (ties go to the
/// lowest index).
void fix_phase(Vector &v);

/// Lowest k eigenpairs of a Hermitian matrix.
Spectrum eigen_low(const Matrix &H, int k, bool vectors = true);

/// Dense up to kDenseSolverCap, restarted Lanczos beyond.
Spectrum eigen_low(const SparseMatrix &H, int k, bool vectors = true);

using LinearOperator = std::function<Vector(const Vector &)>;

struct LanczosOptions {
    double tol = kResidualTol;
    int max_basis = 80;
    /// Total operator applications before giving up; 0 means 10 * dim.
    long max_applications = 0;
    std::uint64_t seed = 0;
};

/// Thick-restarted Lanczos with full reorthogonalization. Tolerance is on
/// ||H v - lambda v|| relative to max(1, |lambda_max estimate|).
Spectrum lanczos_low(const LinearOperator &H, Eigen::Index dim, int k, const LanczosOptions &options = {});

/// (1-s) diag(0,1,...,1) + s * (tridiagonal random-walk Laplacian with
/// 1/2 corners, 1 inside, -1/2 off-diagonal), side L+1.
RealMatrix s0_closed_form(double s, int L);

}  // namespace adiaforge
