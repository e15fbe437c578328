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
#include <string>
#include <vector>

#include "adiaforge/circuit.hpp"
#include "adiaforge/local_hamiltonian.hpp"
#include "adiaforge/sparse_vector.hpp"

namespace adiaforge {

/// Six internal states of a grid particle.
enum class Particle : int { Unborn = 0, FirstUp = 1, FirstDown = 2, SecondUp = 3, SecondDown = 4, Dead = 5 };

enum class Phase : int { Unborn = 0, First = 1, Second = 2, Dead = 3 };

Phase phase_of(int particle_state);
char phase_char(Phase phase);
Phase phase_from_char(char c);

/// Particle index of site (row 1..n, column 0..R).
inline int grid_site(int row, int col, int R) {
    return (row - 1) * (R + 1) + col;
}

struct GridShape {
    int n = 0;
    int R = 0;
    /// Row-major, rows top-down, columns left-right.
    std::vector<Phase> phases;

    Phase at(int row, int col) const {
        return phases[static_cast<std::size_t>((row - 1) * (R + 1) + col)];
    }
    void set(int row, int col, Phase p) {
        phases[static_cast<std::size_t>((row - 1) * (R + 1) + col)] = p;
    }
    /// Rows joined by '/', e.g. "FO/FO".
    std::string to_string() const;
    static GridShape from_string(const std::string &text);

    bool operator==(const GridShape &other) const = default;
    bool operator<(const GridShape &other) const;
};

GridShape legal_shape(int l, int n, int R);

std::vector<GridShape> enumerate_legal(int n, int R);

enum class Orientation { Horizontal, Vertical };

/// One forbidden (first, second) phase pair: left/right for horizontal,
/// top/bottom for vertical.
struct ForbiddenPair {
    Orientation orientation;
    Phase first;
    Phase second;
};

struct RuleGroup {
    int id;
    std::string description;
    std::vector<ForbiddenPair> pairs;
};

/// The eight rule groups of the local-legality table.
const std::vector<RuleGroup> &rule_groups();

/// Distinct forbidden pairs across all groups.
std::vector<ForbiddenPair> forbidden_pairs();

struct RuleViolation {
    int group;
    Orientation orientation;
    int row_a, col_a;
    int row_b, col_b;
    std::string configuration;  // two phase characters
};

struct RuleCheck {
    bool passed = true;
    std::vector<RuleViolation> violations;
};

RuleCheck passes_rules(const GridShape &shape);

inline constexpr int kRulePassSiteCap = 10;

/// Every shape over {O, F, S, D} passing all rules, sorted. n(R+1) <= 10.
std::vector<GridShape> rule_pass_set(int n, int R);

struct ShapeDiscrepancy {
    std::vector<GridShape> legal;
    std::vector<GridShape> rule_pass;
    std::vector<GridShape> legal_not_passing;  // expected empty
    std::vector<GridShape> passing_not_legal;
};

ShapeDiscrepancy shape_discrepancy(int n, int R);

/// gamma^j_l for l = 0..L on 6^{n(R+1)}: the legal shape of l with the
/// active particles carrying U_l...U_1|j> (0 -> up, 1 -> down).
std::vector<SparseVector> grid_gamma_basis(const GridLayoutCircuit &layout, BasisIndex j);

struct GridOptions {
    double epsilon = 1.0;
    std::optional<double> J;
    int l_exponent = 6;
};

/// H''_init = H''_clockinit + H''_input + J H''_clock,
/// H''_final = 1/2 sum_l H''_l + H''_input + J H''_clock.
AdiabaticProgram build_grid_program(const GridLayoutCircuit &layout, const GridOptions &options = {});

/// Individual pieces, on n(R+1) six-state particles.
HamiltonianSum grid_clock_term(int n, int R);
HamiltonianSum grid_input_term(int n, int R);
HamiltonianSum grid_clockinit_term(int n, int R);
HamiltonianSum grid_propagation_term(int l, const GridLayoutCircuit &layout);

}  // namespace adiaforge
