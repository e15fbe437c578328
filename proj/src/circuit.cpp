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

#include "adiaforge/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

namespace adiaforge {

BasisIndex checked_pow(std::uint64_t base, int exponent) {
    if (exponent < 0) {
        throw ValidationError("checked_pow: negative exponent");
    }
    BasisIndex result = 1;
    for (int i = 0; i < exponent; ++i) {
        if (base != 0 && result > (BasisIndex{1} << 62) / base) {
            throw ValidationError("dimension overflow: " + std::to_string(base) + "^" +
                                  std::to_string(exponent) + " exceeds 2^62");
        }
        result *= base;
    }
    return result;
}

void Gate::validate(int n) const {
    if (arity() != 1 && arity() != 2) {
        throw ValidationError("gate '" + name + "': arity must be 1 or 2");
    }
    const Eigen::Index side = Eigen::Index{1} << arity();
    if (unitary.rows() != side || unitary.cols() != side) {
        throw ValidationError("gate '" + name + "': matrix side must be " + std::to_string(side));
    }
    std::set<int> seen;
    for (int t : targets) {
        if (t < 0 || t >= n) {
            throw ValidationError("gate '" + name + "': target " + std::to_string(t) +
                                  " outside [0, " + std::to_string(n) + ")");
        }
        if (!seen.insert(t).second) {
            throw ValidationError("gate '" + name + "': repeated target " + std::to_string(t));
        }
    }
    const double err = (unitary.adjoint() * unitary - Matrix::Identity(side, side)).cwiseAbs().maxCoeff();
    if (err > 1e-12) {
        std::ostringstream os;
        os << "gate '" << name << "': not unitary (deviation " << err << ")";
        throw ValidationError(os.str());
    }
}

bool Gate::is_identity(double tol) const {
    return (unitary - Matrix::Identity(unitary.rows(), unitary.cols())).cwiseAbs().maxCoeff() <= tol;
}

namespace gates {

Gate X(int q) {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return Gate{"X", {q}, m};
}

Gate H(int q) {
    Matrix m(2, 2);
    const double r = 1.0 / std::sqrt(2.0);
    m << r, r, r, -r;
    return Gate{"H", {q}, m};
}

Gate I(int q) {
    return Gate{"I", {q}, Matrix::Identity(2, 2)};
}

Gate I2(int a, int b) {
    return Gate{"I", {a, b}, Matrix::Identity(4, 4)};
}

Gate CNOT(int control, int target) {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = m(1, 1) = 1;
    m(2, 3) = m(3, 2) = 1;
    return Gate{"CNOT", {control, target}, m};
}

Gate SWAP(int a, int b) {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = m(3, 3) = 1;
    m(1, 2) = m(2, 1) = 1;
    return Gate{"SWAP", {a, b}, m};
}

Gate custom(std::vector<int> targets, Matrix unitary, std::string name) {
    return Gate{std::move(name), std::move(targets), std::move(unitary)};
}

}  // namespace gates

void Circuit::validate() const {
    if (n < 1) {
        throw ValidationError("circuit: n must be >= 1");
    }
    if (gates.empty()) {
        throw ValidationError("circuit: at least one gate required (L >= 1)");
    }
    for (const auto &g : gates) {
        g.validate(n);
    }
}

void apply_gate(const Gate &gate, int n, Vector &state) {
    const BasisIndex dim = BasisIndex{1} << n;
    if (static_cast<BasisIndex>(state.size()) != dim) {
        throw ValidationError("apply_gate: state dimension does not match n");
    }
    if (gate.arity() == 1) {
        const BasisIndex stride = BasisIndex{1} << (n - 1 - gate.targets[0]);
        const Matrix &u = gate.unitary;
        for (BasisIndex x = 0; x < dim; ++x) {
            if (x & stride) continue;
            const Complex a0 = state[x];
            const Complex a1 = state[x | stride];
            state[x] = u(0, 0) * a0 + u(0, 1) * a1;
            state[x | stride] = u(1, 0) * a0 + u(1, 1) * a1;
        }
        return;
    }
    const BasisIndex hi = BasisIndex{1} << (n - 1 - gate.targets[0]);
    const BasisIndex lo = BasisIndex{1} << (n - 1 - gate.targets[1]);
    const Matrix &u = gate.unitary;
    for (BasisIndex x = 0; x < dim; ++x) {
        if ((x & hi) || (x & lo)) continue;
        const BasisIndex idx[4] = {x, x | lo, x | hi, x | hi | lo};
        Complex in[4];
        for (int k = 0; k < 4; ++k) in[k] = state[idx[k]];
        for (int r = 0; r < 4; ++r) {
            Complex acc = 0;
            for (int c = 0; c < 4; ++c) acc += u(r, c) * in[c];
            state[idx[r]] = acc;
        }
    }
}

Vector basis_state(int n, BasisIndex j) {
    Vector v = Vector::Zero(Eigen::Index{1} << n);
    v[static_cast<Eigen::Index>(j)] = 1.0;
    return v;
}

CircuitStateTrace simulate(const Circuit &circuit, BasisIndex input) {
    circuit.validate();
    if (circuit.n > 30) {
        throw ValidationError("simulate: n > 30 is beyond dense state-vector range");
    }
    CircuitStateTrace trace;
    trace.states.reserve(circuit.gates.size() + 1);
    Vector state = basis_state(circuit.n, input);
    trace.states.push_back(state);
    for (const auto &g : circuit.gates) {
        apply_gate(g, circuit.n, state);
        trace.states.push_back(state);
    }
    return trace;
}

BasisIndex clock_index(int l, int L) {
    return (BasisIndex{1} << L) - (BasisIndex{1} << (L - l));
}

Vector history_state(const Circuit &circuit) {
    circuit.validate();
    const int L = circuit.length();
    if (circuit.n + L > kHistoryQubitCap) {
        throw ValidationError("history_state: n + L = " + std::to_string(circuit.n + L) +
                              " exceeds the dense guard of " + std::to_string(kHistoryQubitCap));
    }
    const auto trace = simulate(circuit);
    const BasisIndex comp_dim = BasisIndex{1} << circuit.n;
    Vector eta = Vector::Zero(static_cast<Eigen::Index>(comp_dim << L));
    const double w = 1.0 / std::sqrt(static_cast<double>(L + 1));
    for (int l = 0; l <= L; ++l) {
        const BasisIndex clk = clock_index(l, L);
        for (BasisIndex x = 0; x < comp_dim; ++x) {
            eta[static_cast<Eigen::Index>((x << L) | clk)] = w * trace.states[l][x];
        }
    }
    return eta;
}

int padding_count(int L, double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 1.0)) {
        throw ValidationError("pad_identities: epsilon must lie in (0, 1]");
    }
    // Guard against representation error in 2/eps (e.g. eps = 0.2).
    return static_cast<int>(std::ceil((2.0 / epsilon - 1.0) * L - 1e-9));
}

Circuit pad_identities(const Circuit &circuit, double epsilon) {
    const int extra = padding_count(circuit.length(), epsilon);
    Circuit out = circuit;
    for (int i = 0; i < extra; ++i) {
        out.gates.push_back(gates::I(0));
    }
    return out;
}

Circuit ensure_min_length(const Circuit &circuit) {
    Circuit out = circuit;
    while (out.length() < 2) {
        out.gates.push_back(gates::I(0));
    }
    return out;
}

void GridLayoutCircuit::validate() const {
    if (n < 1 || R < 1) {
        throw ValidationError("grid layout: n and R must be >= 1");
    }
    if (static_cast<int>(gates.size()) != 2 * n * R) {
        throw ValidationError("grid layout: expected 2nR = " + std::to_string(2 * n * R) + " gates");
    }
    for (int r = 0; r < R; ++r) {
        for (int i = 1; i <= 2 * n; ++i) {
            const Gate &g = gates[2 * n * r + i - 1];
            g.validate(n);
            const std::string where = "grid layout: round " + std::to_string(r) + " gate " + std::to_string(i);
            if (i == 1) {
                if (g.arity() != 1 || g.targets[0] != 0) {
                    throw ValidationError(where + " must be a one-qubit gate on qubit 0");
                }
            } else if (i <= n) {
                if (g.arity() != 2 || g.targets[0] != i - 2 || g.targets[1] != i - 1) {
                    throw ValidationError(where + " must be a two-qubit gate on (" + std::to_string(i - 2) +
                                          ", " + std::to_string(i - 1) + ")");
                }
            } else {
                if (g.arity() != 1 || g.targets[0] != 2 * n - i || !g.is_identity(1e-12)) {
                    throw ValidationError(where + " must be the identity on qubit " + std::to_string(2 * n - i));
                }
            }
        }
    }
}

Circuit GridLayoutCircuit::to_circuit() const {
    return Circuit{n, gates};
}

namespace {

Matrix kron(const Matrix &a, const Matrix &b) {
    return Eigen::kroneckerProduct(a, b);
}

void append_identity_tail(int n, std::vector<Gate> &round) {
    for (int i = n + 1; i <= 2 * n; ++i) {
        round.push_back(gates::I(2 * n - i));
    }
}

}  // namespace

GridLayoutCircuit to_grid_layout(const Circuit &input) {
    input.validate();
    const int n = input.n;
    if (input.length() % (2 * n) == 0) {
        GridLayoutCircuit as_is{n, input.length() / (2 * n), input.gates};
        try {
            as_is.validate();
            return as_is;
        } catch (const ValidationError &) {
        }
    }
    // Identity gates carry no information; the layout adds its own.
    Circuit circuit{n, {}};
    for (const auto &g : input.gates) {
        if (!g.is_identity()) circuit.gates.push_back(g);
    }
    std::vector<int> phys(n);  // logical -> physical
    std::vector<int> at(n);    // physical -> logical
    std::iota(phys.begin(), phys.end(), 0);
    std::iota(at.begin(), at.end(), 0);

    auto do_swap = [&](int p) {
        std::swap(at[p], at[p + 1]);
        phys[at[p]] = p;
        phys[at[p + 1]] = p + 1;
    };
    auto sorted = [&] {
        for (int p = 0; p < n; ++p)
            if (at[p] != p) return false;
        return true;
    };

    GridLayoutCircuit out;
    out.n = n;
    std::size_t next = 0;
    const Matrix id2 = Matrix::Identity(2, 2);

    while (next < circuit.gates.size() || !sorted() || out.R == 0) {
        std::vector<Gate> round;
        for (int slot = 1; slot <= n; ++slot) {
            std::optional<Gate> placed;
            if (next < circuit.gates.size()) {
                const Gate &g = circuit.gates[next];
                if (g.arity() == 1) {
                    const int p = phys[g.targets[0]];
                    if (slot == 1 && p == 0) {
                        placed = Gate{g.name, {0}, g.unitary};
                        ++next;
                    } else if (slot >= 2 && p == slot - 1) {
                        placed = Gate{g.name, {slot - 2, slot - 1}, kron(id2, g.unitary)};
                        ++next;
                    }
                } else if (slot >= 2) {
                    const int pa = phys[g.targets[0]];
                    const int pb = phys[g.targets[1]];
                    const int top = slot - 2;
                    if (std::abs(pa - pb) == 1) {
                        if (std::min(pa, pb) == top) {
                            if (pa < pb) {
                                placed = Gate{g.name, {top, top + 1}, g.unitary};
                            } else {
                                const Matrix sw = gates::SWAP(0, 1).unitary;
                                placed = Gate{g.name, {top, top + 1}, sw * g.unitary * sw};
                            }
                            ++next;
                        }
                    } else {
                        // Walk the second operand one step toward the first.
                        const int want = pb > pa ? pb - 1 : pb;
                        if (want == top) {
                            placed = gates::SWAP(top, top + 1);
                            do_swap(top);
                        }
                    }
                }
            } else if (slot >= 2 && at[slot - 2] > at[slot - 1]) {
                placed = gates::SWAP(slot - 2, slot - 1);
                do_swap(slot - 2);
            }
            if (!placed) {
                placed = slot == 1 ? gates::I(0) : gates::I2(slot - 2, slot - 1);
            }
            round.push_back(std::move(*placed));
        }
        append_identity_tail(n, round);
        out.gates.insert(out.gates.end(), round.begin(), round.end());
        ++out.R;
    }
    out.validate();
    return out;
}

GridLayoutCircuit pad_identity_rounds(const GridLayoutCircuit &circuit, int rounds) {
    if (rounds < 0) {
        throw ValidationError("pad_identity_rounds: negative round count");
    }
    GridLayoutCircuit out = circuit;
    for (int r = 0; r < rounds; ++r) {
        std::vector<Gate> round;
        round.push_back(gates::I(0));
        for (int slot = 2; slot <= out.n; ++slot) round.push_back(gates::I2(slot - 2, slot - 1));
        append_identity_tail(out.n, round);
        out.gates.insert(out.gates.end(), round.begin(), round.end());
        ++out.R;
    }
    return out;
}

}  // namespace adiaforge
