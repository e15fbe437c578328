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

#include <optional>

#include "adiaforge/circuit.hpp"
#include "adiaforge/local_hamiltonian.hpp"

namespace adiaforge {

/// H'_l: single-clock hopping -U (x) |1><0|_l - U^dag (x) |0><1|_l plus the
/// clock-only identifiers of H_l as separate terms.
HamiltonianSum propagation_term_3(int l, const Gate &gate, int n, int L);

struct Kitaev3Options {
    double epsilon = 1.0;
    std::optional<double> J;
    /// Exponent of L in the default J = eps^-2 L^p.
    int l_exponent = 6;
};

double default_penalty(double epsilon, int L, int l_exponent = 6);

/// Largest norm bound of the non-clock parts of h_init and h_final.
double non_clock_norm_bound(const AdiabaticProgram &program);

/// H'_init = H_clockinit + H_input + J H_clock,
/// H'_final = 1/2 sum_l H'_l + H_input + J H_clock.
/// Rejects J <= 2 * non_clock_norm_bound.
AdiabaticProgram build_3local(const Circuit &circuit, const Kitaev3Options &options = {});

}  // namespace adiaforge
