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

#include <cmath>
#include <sstream>

#include "catch_amalgamated.hpp"

#include "adiaforge/eigen.hpp"
#include "adiaforge/gap_profile.hpp"
#include "adiaforge/grid6.hpp"
#include "adiaforge/kitaev3.hpp"
#include "adiaforge/kitaev5.hpp"

using namespace adiaforge;
using Catch::Matchers::WithinAbs;

namespace {

const Circuit kBell{2, {gates::H(0), gates::CNOT(0, 1)}};

}  // namespace

TEST_CASE("uniform samples") {
    const auto s = uniform_samples(5);
    REQUIRE(s.size() == 5);
    CHECK(s.front() == 0.0);
    CHECK(s.back() == 1.0);
    CHECK_THAT(s[1], WithinAbs(0.25, 1e-15));
    CHECK_THROWS_AS(uniform_samples(1), ValidationError);
}

TEST_CASE("S0 profile of the Bell program clears the explicit floor") {
    const AdiabaticProgram p = build_5local(kBell);
    const GapProfile g = gap_profile(p, SubspaceMode::S0, uniform_samples(101));
    REQUIRE(g.samples.size() == 101);
    CHECK(g.mode == SubspaceMode::S0);
    CHECK(g.min_gap >= 1.0 / (144.0 * p.L * p.L));
    CHECK_THAT(g.samples.front().gap, WithinAbs(1.0, 1e-12));
    for (const auto &smp : g.samples) {
        const Spectrum sp = eigen_low(s0_closed_form(smp.s, p.L).cast<Complex>(), 2, false);
        CHECK_THAT(smp.lambda0, WithinAbs(sp.eigenvalues[0], 1e-10));
        CHECK_THAT(smp.gap, WithinAbs(sp.gap, 1e-10));
    }
}

TEST_CASE("full-space profile of the 5-local program") {
    const AdiabaticProgram p = build_5local(kBell);
    const GapProfile full = gap_profile(p, SubspaceMode::Full, {0.0, 0.5, 1.0});
    CHECK_THAT(full.samples[0].lambda0, WithinAbs(0.0, 1e-12));
    CHECK(full.min_gap > 0.0);
    const GapProfile s = gap_profile(p, SubspaceMode::S, {0.0, 0.5, 1.0});
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK_THAT(s.samples[i].lambda0, WithinAbs(full.samples[i].lambda0, 1e-10));
    }
}

TEST_CASE("3-local full-space gap stays near the restricted gap") {
    Kitaev3Options o;
    o.J = 200.0;
    const AdiabaticProgram p = build_3local(kBell, o);
    const GapProfile full = gap_profile(p, SubspaceMode::Full, uniform_samples(11));
    const GapProfile s0 = gap_profile(p, SubspaceMode::S, uniform_samples(11));
    const double K = non_clock_norm_bound(p);
    const double shift = K * K / (*p.J - 2.0 * K);
    for (std::size_t i = 0; i < full.samples.size(); ++i) {
        CHECK(full.samples[i].gap >= s0.samples[i].gap - shift - 1e-9);
    }
}

TEST_CASE("grid S-mode profile tracks the 5-local profile of the layout circuit") {
    const GridLayoutCircuit layout = to_grid_layout(kBell);
    const AdiabaticProgram grid = build_grid_program(layout);
    const AdiabaticProgram five = build_5local(layout.to_circuit());
    const auto samples = uniform_samples(21);
    const GapProfile g = gap_profile(grid, SubspaceMode::S, samples);
    const GapProfile f = gap_profile(five, SubspaceMode::S, samples);
    CHECK(std::abs(g.min_gap - f.min_gap) <= 0.1 * f.min_gap);
}

TEST_CASE("csv layout") {
    const AdiabaticProgram p = build_5local(kBell);
    const std::string csv = to_csv(gap_profile(p, SubspaceMode::S0, uniform_samples(3)));
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "s,lambda0,lambda1,gap");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 3);
    CHECK(csv.find("0.5,") != std::string::npos);
    CHECK(csv == to_csv(gap_profile(p, SubspaceMode::S0, uniform_samples(3))));
}
