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

#include "adiaforge/grid6.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

#include "adiaforge/kitaev3.hpp"

namespace adiaforge {

Phase phase_of(int particle_state) {
    switch (particle_state) {
    case 0:
        return Phase::Unborn;
    case 1:
    case 2:
        return Phase::First;
    case 3:
    case 4:
        return Phase::Second;
    case 5:
        return Phase::Dead;
    default:
        throw ValidationError("particle state " + std::to_string(particle_state) + " outside [0, 6)");
    }
}

char phase_char(Phase phase) {
    static constexpr char chars[] = {'O', 'F', 'S', 'D'};
    return chars[static_cast<int>(phase)];
}

Phase phase_from_char(char c) {
    switch (c) {
    case 'O':
        return Phase::Unborn;
    case 'F':
        return Phase::First;
    case 'S':
        return Phase::Second;
    case 'D':
        return Phase::Dead;
    default:
        throw ValidationError(std::string("unknown phase character '") + c + "'");
    }
}

std::string GridShape::to_string() const {
    std::string out;
    for (int i = 1; i <= n; ++i) {
        if (i > 1) out += '/';
        for (int r = 0; r <= R; ++r) out += phase_char(at(i, r));
    }
    return out;
}

GridShape GridShape::from_string(const std::string &text) {
    std::vector<std::string> rows;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, '/')) rows.push_back(row);
    if (rows.empty() || rows[0].empty()) {
        throw ValidationError("empty shape string");
    }
    GridShape shape;
    shape.n = static_cast<int>(rows.size());
    shape.R = static_cast<int>(rows[0].size()) - 1;
    for (const auto &r : rows) {
        if (static_cast<int>(r.size()) != shape.R + 1) {
            throw ValidationError("shape rows have different lengths: '" + text + "'");
        }
        for (char c : r) shape.phases.push_back(phase_from_char(c));
    }
    return shape;
}

bool GridShape::operator<(const GridShape &other) const {
    if (n != other.n) return n < other.n;
    if (R != other.R) return R < other.R;
    return phases < other.phases;
}

namespace {

void check_grid_dims(int n, int R) {
    if (n < 1 || R < 1) {
        throw ValidationError("grid needs n >= 1 and R >= 1 (got n=" + std::to_string(n) + ", R=" +
                              std::to_string(R) + ")");
    }
}

GridShape blank(int n, int R) {
    return GridShape{n, R, std::vector<Phase>(static_cast<std::size_t>(n * (R + 1)), Phase::Unborn)};
}

}  // namespace

GridShape legal_shape(int l, int n, int R) {
    check_grid_dims(n, R);
    const int L = 2 * n * R;
    if (l < 0 || l > L) {
        throw ValidationError("legal_shape: l=" + std::to_string(l) + " outside [0, " + std::to_string(L) + "]");
    }
    GridShape shape = blank(n, R);
    const int r = l / (2 * n);
    const int rem = l % (2 * n);
    for (int i = 1; i <= n; ++i) {
        for (int c = 0; c < r; ++c) shape.set(i, c, Phase::Dead);
    }
    if (rem <= n) {
        for (int i = 1; i <= n; ++i) shape.set(i, r, i <= rem ? Phase::Second : Phase::First);
    } else {
        const int k = rem - n;
        for (int i = 1; i <= n; ++i) {
            const bool top = i <= n - k;
            shape.set(i, r, top ? Phase::Second : Phase::Dead);
            shape.set(i, r + 1, top ? Phase::Unborn : Phase::First);
        }
    }
    return shape;
}

std::vector<GridShape> enumerate_legal(int n, int R) {
    check_grid_dims(n, R);
    std::vector<GridShape> shapes;
    for (int l = 0; l <= 2 * n * R; ++l) shapes.push_back(legal_shape(l, n, R));
    return shapes;
}

const std::vector<RuleGroup> &rule_groups() {
    using P = Phase;
    constexpr auto H = Orientation::Horizontal;
    constexpr auto V = Orientation::Vertical;
    static const std::vector<RuleGroup> groups = {
        {1, "unborn is right of all others", {{H, P::Unborn, P::First}, {H, P::Unborn, P::Second}, {H, P::Unborn, P::Dead}}},
        {2, "dead is left of all others", {{H, P::Unborn, P::Dead}, {H, P::First, P::Dead}, {H, P::Second, P::Dead}}},
        {3, "unborn and dead not horizontally adjacent", {{H, P::Unborn, P::Dead}, {H, P::Dead, P::Unborn}}},
        {4,
         "one active particle per row",
         {{H, P::First, P::First}, {H, P::First, P::Second}, {H, P::Second, P::First}, {H, P::Second, P::Second}}},
        {5, "only second above second", {{V, P::Unborn, P::Second}, {V, P::First, P::Second}, {V, P::Dead, P::Second}}},
        {6, "only first below first", {{V, P::First, P::Unborn}, {V, P::First, P::Second}, {V, P::First, P::Dead}}},
        {7, "unborn and dead not vertically adjacent", {{V, P::Unborn, P::Dead}, {V, P::Dead, P::Unborn}}},
        {8, "no unborn below second, no first below dead", {{V, P::Second, P::Unborn}, {V, P::Dead, P::First}}},
    };
    return groups;
}

std::vector<ForbiddenPair> forbidden_pairs() {
    std::vector<ForbiddenPair> out;
    std::set<std::tuple<int, int, int>> seen;
    for (const auto &g : rule_groups()) {
        for (const auto &p : g.pairs) {
            if (seen.insert({static_cast<int>(p.orientation), static_cast<int>(p.first), static_cast<int>(p.second)})
                    .second) {
                out.push_back(p);
            }
        }
    }
    return out;
}

RuleCheck passes_rules(const GridShape &shape) {
    RuleCheck check;
    auto scan = [&](Orientation o, int ra, int ca, int rb, int cb) {
        const Phase a = shape.at(ra, ca);
        const Phase b = shape.at(rb, cb);
        for (const auto &g : rule_groups()) {
            for (const auto &p : g.pairs) {
                if (p.orientation == o && p.first == a && p.second == b) {
                    check.passed = false;
                    check.violations.push_back(
                        RuleViolation{g.id, o, ra, ca, rb, cb, std::string{phase_char(a), phase_char(b)}});
                }
            }
        }
    };
    for (int i = 1; i <= shape.n; ++i) {
        for (int c = 0; c <= shape.R; ++c) {
            if (c < shape.R) scan(Orientation::Horizontal, i, c, i, c + 1);
            if (i < shape.n) scan(Orientation::Vertical, i, c, i + 1, c);
        }
    }
    return check;
}

std::vector<GridShape> rule_pass_set(int n, int R) {
    check_grid_dims(n, R);
    const int sites = n * (R + 1);
    if (sites > kRulePassSiteCap) {
        throw ValidationError("rule_pass_set: n(R+1) = " + std::to_string(sites) + " exceeds " +
                              std::to_string(kRulePassSiteCap));
    }
    // forbidden[o][a][b]
    bool forbidden[2][4][4] = {};
    for (const auto &p : forbidden_pairs()) {
        forbidden[static_cast<int>(p.orientation)][static_cast<int>(p.first)][static_cast<int>(p.second)] = true;
    }
    const int cols = R + 1;
    std::vector<GridShape> out;
    std::vector<int> ph(static_cast<std::size_t>(sites), 0);
    const std::uint64_t total = std::uint64_t{1} << (2 * sites);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t rest = code;
        for (int s = sites - 1; s >= 0; --s) {
            ph[static_cast<std::size_t>(s)] = static_cast<int>(rest & 3);
            rest >>= 2;
        }
        bool ok = true;
        for (int s = 0; s < sites && ok; ++s) {
            const int c = s % cols;
            if (c + 1 < cols && forbidden[0][ph[s]][ph[s + 1]]) ok = false;
            if (s + cols < sites && forbidden[1][ph[s]][ph[s + cols]]) ok = false;
        }
        if (!ok) continue;
        GridShape shape = blank(n, R);
        for (int s = 0; s < sites; ++s) shape.phases[static_cast<std::size_t>(s)] = static_cast<Phase>(ph[s]);
        out.push_back(std::move(shape));
    }
    return out;
}

ShapeDiscrepancy shape_discrepancy(int n, int R) {
    ShapeDiscrepancy d;
    d.legal = enumerate_legal(n, R);
    d.rule_pass = rule_pass_set(n, R);
    std::vector<GridShape> legal_sorted = d.legal;
    std::sort(legal_sorted.begin(), legal_sorted.end());
    std::set_difference(legal_sorted.begin(), legal_sorted.end(), d.rule_pass.begin(), d.rule_pass.end(),
                        std::back_inserter(d.legal_not_passing));
    std::set_difference(d.rule_pass.begin(), d.rule_pass.end(), legal_sorted.begin(), legal_sorted.end(),
                        std::back_inserter(d.passing_not_legal));
    return d;
}

std::vector<SparseVector> grid_gamma_basis(const GridLayoutCircuit &layout, BasisIndex j) {
    layout.validate();
    const int n = layout.n;
    const int R = layout.R;
    const int L = layout.length();
    if (j >= (BasisIndex{1} << n)) {
        throw ValidationError("grid_gamma_basis: j out of range");
    }
    const int N = n * (R + 1);
    const BasisIndex dim = checked_pow(6, N);
    const auto trace = simulate(layout.to_circuit(), j);

    std::vector<SparseVector> basis;
    basis.reserve(static_cast<std::size_t>(L + 1));
    for (int l = 0; l <= L; ++l) {
        const GridShape shape = legal_shape(l, n, R);
        BasisIndex base = 0;
        std::vector<BasisIndex> stride(static_cast<std::size_t>(n));
        std::vector<int> offset(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) {
            for (int c = 0; c <= R; ++c) {
                const Phase p = shape.at(i, c);
                const BasisIndex w = checked_pow(6, N - 1 - grid_site(i, c, R));
                if (p == Phase::Dead) {
                    base += 5 * w;
                } else if (p == Phase::First || p == Phase::Second) {
                    stride[static_cast<std::size_t>(i - 1)] = w;
                    offset[static_cast<std::size_t>(i - 1)] = p == Phase::First ? 1 : 3;
                }
            }
        }
        const Vector &alpha = trace.states[static_cast<std::size_t>(l)];
        std::vector<SparseVector::Entry> entries;
        for (BasisIndex x = 0; x < (BasisIndex{1} << n); ++x) {
            BasisIndex idx = base;
            for (int i = 0; i < n; ++i) {
                const int bit = static_cast<int>((x >> (n - 1 - i)) & 1);
                idx += static_cast<BasisIndex>(offset[static_cast<std::size_t>(i)] + bit) *
                       stride[static_cast<std::size_t>(i)];
            }
            entries.emplace_back(idx, alpha[static_cast<Eigen::Index>(x)]);
        }
        basis.emplace_back(dim, std::move(entries));
    }
    return basis;
}

namespace {

Matrix phase_projector(Phase p) {
    Matrix m = Matrix::Zero(6, 6);
    for (int s = 0; s < 6; ++s) {
        if (phase_of(s) == p) m(s, s) = 1.0;
    }
    return m;
}

Matrix state_projector(int s) {
    Matrix m = Matrix::Zero(6, 6);
    m(s, s) = 1.0;
    return m;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    return Eigen::kroneckerProduct(a, b);
}

int first(int bit) {
    return 1 + bit;
}
int second(int bit) {
    return 3 + bit;
}

}  // namespace

HamiltonianSum grid_clock_term(int n, int R) {
    check_grid_dims(n, R);
    HamiltonianSum sum{n * (R + 1), 6, {}};
    const auto pairs = forbidden_pairs();
    for (int i = 1; i <= n; ++i) {
        for (int c = 0; c <= R; ++c) {
            for (const auto &p : pairs) {
                const Matrix op = kron(phase_projector(p.first), phase_projector(p.second));
                if (p.orientation == Orientation::Horizontal && c < R) {
                    sum.terms.push_back(make_term({grid_site(i, c, R), grid_site(i, c + 1, R)}, op, 6, 1.0, "clock"));
                } else if (p.orientation == Orientation::Vertical && i < n) {
                    sum.terms.push_back(make_term({grid_site(i, c, R), grid_site(i + 1, c, R)}, op, 6, 1.0, "clock"));
                }
            }
        }
    }
    return sum;
}

HamiltonianSum grid_input_term(int n, int R) {
    check_grid_dims(n, R);
    HamiltonianSum sum{n * (R + 1), 6, {}};
    for (int i = 1; i <= n; ++i) {
        sum.terms.push_back(make_term({grid_site(i, 0, R)}, state_projector(first(1)), 6, 1.0, "input"));
    }
    return sum;
}

HamiltonianSum grid_clockinit_term(int n, int R) {
    check_grid_dims(n, R);
    HamiltonianSum sum{n * (R + 1), 6, {}};
    const Matrix op = Matrix::Identity(6, 6) - state_projector(first(0)) - state_projector(first(1));
    sum.terms.push_back(make_term({grid_site(1, 0, R)}, op, 6, 1.0, "clockinit"));
    return sum;
}

HamiltonianSum grid_propagation_term(int l, const GridLayoutCircuit &layout) {
    const int n = layout.n;
    const int R = layout.R;
    const int L = layout.length();
    if (l < 1 || l > L) {
        throw ValidationError("grid_propagation_term: l=" + std::to_string(l) + " outside [1, " + std::to_string(L) +
                              "]");
    }
    const int r = (l - 1) / (2 * n);
    const int rem = l - 2 * n * r;  // 1..2n
    const Matrix PS = phase_projector(Phase::Second);
    const Matrix PF = phase_projector(Phase::First);
    const Matrix PD = phase_projector(Phase::Dead);
    const Matrix PO = phase_projector(Phase::Unborn);
    auto site = [R](int row, int col) { return grid_site(row, col, R); };

    HamiltonianSum sum{n * (R + 1), 6, {}};
    auto add = [&](std::vector<int> sites, const Matrix &op, const char *label) {
        sum.terms.push_back(make_term(sites, op, 6, 1.0, label));
    };

    if (rem <= n) {
        // Downward: row k turns from first to second phase while U_l acts.
        const int k = rem;
        const Gate &gate = layout.gates[static_cast<std::size_t>(l - 1)];
        if (k == 1) {
            Matrix hop = Matrix::Zero(6, 6);
            for (int v = 0; v < 2; ++v) {
                for (int w = 0; w < 2; ++w) {
                    hop(second(w), first(v)) = -gate.unitary(w, v);
                    hop(first(v), second(w)) = -std::conj(gate.unitary(w, v));
                }
            }
            add({site(1, r)}, hop, "prop");
            add({site(1, r)}, PF, "prop_id");
        } else {
            // Gate on qubits (k-2, k-1), i.e. rows k-1 (top) and k.
            Matrix U = gate.unitary;
            if (gate.targets[0] > gate.targets[1]) {
                const Matrix swap = gates::SWAP(0, 1).unitary;
                U = swap * U * swap;
            }
            Matrix hop = Matrix::Zero(36, 36);
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    const int before = second(a) * 6 + first(b);
                    for (int a2 = 0; a2 < 2; ++a2) {
                        for (int b2 = 0; b2 < 2; ++b2) {
                            const int after = second(a2) * 6 + second(b2);
                            const Complex u = U(a2 * 2 + b2, a * 2 + b);
                            hop(after, before) = -u;
                            hop(before, after) = -std::conj(u);
                        }
                    }
                }
            }
            add({site(k - 1, r), site(k, r)}, hop, "prop");
            add({site(k - 1, r), site(k, r)}, kron(PS, PF), "prop_id");
        }
        if (k == n) {
            add({site(n, r)}, PS, "prop_id");
        } else {
            add({site(k, r), site(k + 1, r)}, kron(PS, PF), "prop_id");
        }
    } else {
        // Upward: the particle in row i moves from column r to r + 1.
        const int k = rem - n;
        const int i = n - k + 1;
        Matrix hop = Matrix::Zero(36, 36);
        for (int v = 0; v < 2; ++v) {
            const int before = second(v) * 6 + static_cast<int>(Particle::Unborn);
            const int after = static_cast<int>(Particle::Dead) * 6 + first(v);
            hop(after, before) = -1.0;
            hop(before, after) = -1.0;
        }
        add({site(i, r), site(i, r + 1)}, hop, "prop");
        if (k == 1) {
            add({site(n, r)}, PS, "prop_id");
        } else {
            add({site(i, r), site(i + 1, r)}, kron(PS, PD), "prop_id");
        }
        if (k == n) {
            add({site(1, r + 1)}, PF, "prop_id");
        } else {
            add({site(i - 1, r + 1), site(i, r + 1)}, kron(PO, PF), "prop_id");
        }
    }
    return sum;
}

AdiabaticProgram build_grid_program(const GridLayoutCircuit &layout, const GridOptions &options) {
    layout.validate();
    const int n = layout.n;
    const int R = layout.R;
    const int L = layout.length();
    const int N = n * (R + 1);
    checked_pow(6, N);

    const double J = options.J.value_or(default_penalty(options.epsilon, L, options.l_exponent));

    AdiabaticProgram p;
    p.flavor = Flavor::Grid;
    p.n = n;
    p.L = L;
    p.L_original = L;
    p.R = R;
    p.circuit = layout.to_circuit();
    p.epsilon = options.epsilon;
    p.J = J;
    p.h_init = HamiltonianSum{N, 6, {}};
    p.h_final = HamiltonianSum{N, 6, {}};

    const HamiltonianSum input = grid_input_term(n, R);
    const HamiltonianSum clock = grid_clock_term(n, R);
    p.h_init.append(grid_clockinit_term(n, R));
    p.h_init.append(input);
    p.h_init.append(clock, J);
    for (int l = 1; l <= L; ++l) p.h_final.append(grid_propagation_term(l, layout), 0.5);
    p.h_final.append(input);
    p.h_final.append(clock, J);

    const double K = non_clock_norm_bound(p);
    if (!(J > 2.0 * K)) {
        std::ostringstream os;
        os << "build_grid_program: J = " << J << " must exceed 2K = " << 2.0 * K << " (leak-lemma hypothesis)";
        throw ValidationError(os.str());
    }
    return p;
}

}  // namespace adiaforge
