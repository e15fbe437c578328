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

struct MarkovChain {
    RealMatrix P;           // row-stochastic
    RealVector pi;          // stationary distribution alpha^2 / Z
    RealVector alpha;       // ground state of M, positive
    double mu = 0.0;        // Perron eigenvalue of G = I - M
    double Z = 0.0;         // sum alpha_i^2
    double lambda0 = 0.0;   // ground energy of M
    double delta_M = 0.0;   // spectral gap of M
    RealVector p_spectrum;  // eigenvalues of P, descending
    double gap = 0.0;       // 1 - second largest eigenvalue of P
    int primitivity_power = 0;
};

/// Maps a real symmetric M with G = I - M entrywise nonnegative and
/// primitive onto P_ij = alpha_j G_ij / (mu alpha_i).
MarkovChain perron_chain(const RealMatrix &M);

enum class CutMode { Exhaustive, PrefixSuffix };

std::string to_string(CutMode mode);
CutMode cut_mode_from_string(const std::string &text);

inline constexpr int kExhaustiveCap = 20;

struct ConductanceReport {
    double phi = 0.0;
    std::vector<int> witness;  // sorted state indices
    double flow = 0.0;         // F(witness)
    double weight = 0.0;       // pi(witness)
    double bound = 0.0;        // phi^2 / 2
    CutMode mode = CutMode::Exhaustive;
};

/// min over nonempty B with pi(B) <= 1/2 of F(B) / pi(B). Exhaustive mode
/// scans subsets in bitmask order and keeps the first minimizer.
ConductanceReport conductance(const MarkovChain &chain, CutMode mode = CutMode::Exhaustive);

}  // namespace adiaforge
