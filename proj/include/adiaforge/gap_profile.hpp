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

#include "adiaforge/local_hamiltonian.hpp"
#include "adiaforge/subspace.hpp"

namespace adiaforge {

struct GapSample {
    double s = 0.0;
    double lambda0 = 0.0;
    double lambda1 = 0.0;
    double gap = 0.0;
};

struct GapProfile {
    SubspaceMode mode = SubspaceMode::S0;
    std::vector<GapSample> samples;
    double min_gap = 0.0;
    double argmin_s = 0.0;
};

/// s_k = k / (count - 1), count >= 2.
std::vector<double> uniform_samples(int count);

/// Gap of H(s) on the full space or restricted to S / S0, per sample.
GapProfile gap_profile(const AdiabaticProgram &program, SubspaceMode mode, const std::vector<double> &s_samples);

/// Header `s,lambda0,lambda1,gap`, 17 significant digits.
std::string to_csv(const GapProfile &profile);

}  // namespace adiaforge
