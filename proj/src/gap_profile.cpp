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

#include "adiaforge/gap_profile.hpp"

#include <cstdio>
#include <limits>

#include "adiaforge/eigen.hpp"
#include "adiaforge/parallel.hpp"

namespace adiaforge {

std::vector<double> uniform_samples(int count) {
    if (count < 2) {
        throw ValidationError("sample count must be >= 2 (got " + std::to_string(count) + ")");
    }
    std::vector<double> s(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) s[static_cast<std::size_t>(k)] = static_cast<double>(k) / (count - 1);
    s.back() = 1.0;
    return s;
}

GapProfile gap_profile(const AdiabaticProgram &program, SubspaceMode mode, const std::vector<double> &s_samples) {
    if (s_samples.empty()) {
        throw ValidationError("gap_profile: no samples");
    }
    for (double s : s_samples) {
        if (!(s >= 0.0 && s <= 1.0)) throw ValidationError("gap_profile: sample outside [0, 1]");
    }
    GapProfile profile;
    profile.mode = mode;
    profile.samples.resize(s_samples.size());

    // H(s) is affine in s: split into the shared part and the two endpoints.
    const HamiltonianSum h0 = interpolate(program, 0.0);
    const HamiltonianSum h1 = interpolate(program, 1.0);

    if (mode == SubspaceMode::Full) {
        const SparseMatrix A = assemble(h0);
        const SparseMatrix B = assemble(h1);
        parallel_for(s_samples.size(), [&](std::size_t i) {
            const double s = s_samples[i];
            const SparseMatrix H = (1.0 - s) * A + s * B;
            const Spectrum sp = eigen_low(H, 2, false);
            profile.samples[i] = GapSample{s, sp.eigenvalues[0], sp.eigenvalues[1], sp.gap};
        });
    } else {
        const SubspaceBasis basis = subspace_basis(program, mode);
        const Matrix A = restrict(h0, basis).matrix;
        const Matrix B = restrict(h1, basis).matrix;
        parallel_for(s_samples.size(), [&](std::size_t i) {
            const double s = s_samples[i];
            const Spectrum sp = eigen_low(Matrix((1.0 - s) * A + s * B), 2, false);
            profile.samples[i] = GapSample{s, sp.eigenvalues[0], sp.eigenvalues[1], sp.gap};
        });
    }

    profile.min_gap = std::numeric_limits<double>::infinity();
    for (const auto &g : profile.samples) {
        if (g.gap < profile.min_gap) {
            profile.min_gap = g.gap;
            profile.argmin_s = g.s;
        }
    }
    return profile;
}

std::string to_csv(const GapProfile &profile) {
    std::string out = "s,lambda0,lambda1,gap\n";
    char buf[128];
    for (const auto &g : profile.samples) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", g.s, g.lambda0, g.lambda1, g.gap);
        out += buf;
    }
    return out;
}

}  // namespace adiaforge
