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

#include <cstdint>
#include <random>

#include "adiaforge/circuit.hpp"
#include "adiaforge/types.hpp"

namespace adiaforge {

using Rng = std::mt19937_64;

/// Gates drawn uniformly from {X, H, CNOT, SWAP}; two-qubit gates only when n >= 2.
Circuit random_circuit(int n, int L, Rng &rng);

/// Entries with real and imaginary parts uniform in [-1, 1], symmetrized.
Matrix random_hermitian(Eigen::Index dim, Rng &rng);

/// Orthonormal columns spanning a random subspace of the given dimension.
Matrix random_isometry(Eigen::Index dim, Eigen::Index cols, Rng &rng);

}  // namespace adiaforge
