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

#include "catch_amalgamated.hpp"

#include "adiaforge/circuit.hpp"
#include "adiaforge/random.hpp"

using namespace adiaforge;
using Catch::Matchers::WithinAbs;

namespace {

// Full 2^n operator of a gate built from explicit Kronecker products and,
// for non-adjacent or reversed targets, a permutation of basis indices.
Matrix full_operator(const Gate &g, int n) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    Matrix out = Matrix::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        int local_in = 0;
        for (int t : g.targets) local_in = (local_in << 1) | static_cast<int>((col >> (n - 1 - t)) & 1);
        for (int local_out = 0; local_out < (1 << g.arity()); ++local_out) {
            Eigen::Index row = col;
            for (int k = 0; k < g.arity(); ++k) {
                const int bit = (local_out >> (g.arity() - 1 - k)) & 1;
                const int shift = n - 1 - g.targets[static_cast<std::size_t>(k)];
                row = (row & ~(Eigen::Index{1} << shift)) | (Eigen::Index{bit} << shift);
            }
            out(row, col) += g.unitary(local_out, local_in);
        }
    }
    return out;
}

Vector oracle_final(const Circuit &c) {
    Vector v = Vector::Zero(Eigen::Index{1} << c.n);
    v[0] = 1.0;
    for (const auto &g : c.gates) v = full_operator(g, c.n) * v;
    return v;
}

}  // namespace

TEST_CASE("simulate single-qubit examples") {
    Circuit x{1, {gates::X(0)}};
    auto tx = simulate(x);
    REQUIRE(tx.states.size() == 2);
    CHECK(tx.states[0].isApprox(basis_state(1, 0)));
    CHECK(tx.states[1].isApprox(basis_state(1, 1)));

    Circuit h{1, {gates::H(0)}};
    auto th = simulate(h);
    CHECK_THAT(th.states[1][0].real(), WithinAbs(1.0 / std::sqrt(2.0), 1e-15));
    CHECK_THAT(th.states[1][1].real(), WithinAbs(1.0 / std::sqrt(2.0), 1e-15));
}

TEST_CASE("simulate Bell circuit") {
    Circuit bell{2, {gates::H(0), gates::CNOT(0, 1)}};
    const Vector out = simulate(bell).states.back();
    Vector expected = Vector::Zero(4);
    expected[0] = expected[3] = 1.0 / std::sqrt(2.0);
    CHECK((out - expected).norm() < 1e-15);
}

TEST_CASE("simulate agrees with a Kronecker-product oracle") {
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + trial % 4;
        const Circuit c = random_circuit(n, 1 + trial % 6, rng);
        CHECK((simulate(c).states.back() - oracle_final(c)).norm() < 1e-12);
    }
}

TEST_CASE("apply_gate honors target order for two-qubit gates") {
    // CNOT with control 2 and target 0 on three qubits maps |001> to |101>.
    Vector v = basis_state(3, 1);
    apply_gate(gates::CNOT(2, 0), 3, v);
    CHECK(std::abs(v[5] - Complex(1.0)) < 1e-15);
}

TEST_CASE("gate and circuit validation") {
    CHECK_THROWS_AS(gates::CNOT(0, 0).validate(2), ValidationError);
    CHECK_THROWS_AS(gates::X(3).validate(2), ValidationError);
    Matrix bad = Matrix::Identity(2, 2);
    bad(0, 0) = 2.0;
    CHECK_THROWS_AS(gates::custom({0}, bad).validate(1), ValidationError);
    CHECK_THROWS_AS((Circuit{1, {}}).validate(), ValidationError);
    CHECK(gates::I2(0, 1).is_identity());
    CHECK_FALSE(gates::H(0).is_identity());
}

TEST_CASE("clock_index is unary with the first clock most significant") {
    CHECK(clock_index(0, 2) == 0b00);
    CHECK(clock_index(1, 2) == 0b10);
    CHECK(clock_index(2, 2) == 0b11);
    CHECK(clock_index(3, 5) == 0b11100);
}

TEST_CASE("history state examples") {
    const double w = 1.0 / std::sqrt(3.0);
    {
        // (|0>|00> + |1>|10> + |1>|11>) / sqrt 3
        const Vector eta = history_state(Circuit{1, {gates::X(0), gates::I(0)}});
        Vector expected = Vector::Zero(8);
        expected[0b000] = w;
        expected[0b110] = w;
        expected[0b111] = w;
        CHECK((eta - expected).norm() < 1e-15);
    }
    {
        const Vector eta = history_state(Circuit{1, {gates::I(0), gates::I(0)}});
        Vector expected = Vector::Zero(8);
        expected[0b000] = expected[0b010] = expected[0b011] = w;
        CHECK((eta - expected).norm() < 1e-15);
    }
    {
        const Vector eta = history_state(Circuit{2, {gates::H(0), gates::CNOT(0, 1)}});
        double block = 0.0;
        for (int x = 0; x < 4; ++x) block += std::norm(eta[(x << 2) | 0b11]);
        CHECK_THAT(block, WithinAbs(1.0 / 3.0, 1e-15));
        CHECK_THAT(eta.norm(), WithinAbs(1.0, 1e-15));
    }
}

TEST_CASE("identity padding") {
    const Circuit two{1, {gates::X(0), gates::X(0)}};
    CHECK(padding_count(2, 1.0) == 2);
    CHECK(pad_identities(two, 1.0).length() == 4);
    CHECK(padding_count(2, 0.5) == 6);
    CHECK(pad_identities(two, 0.5).length() == 8);
    CHECK(padding_count(2, 0.2) == 18);
    CHECK_THROWS_AS(pad_identities(two, 0.0), ValidationError);
    CHECK_THROWS_AS(pad_identities(two, 1.5), ValidationError);

    // L = 3, eps = 1: L' = 6, tail weight on l >= 3 is 4/7.
    const Circuit three{1, {gates::X(0), gates::H(0), gates::X(0)}};
    const Circuit padded = pad_identities(three, 1.0);
    REQUIRE(padded.length() == 6);
    const Vector eta = history_state(padded);
    double tail = 0.0;
    for (int l = 3; l <= 6; ++l) {
        for (int x = 0; x < 2; ++x) tail += std::norm(eta[static_cast<Eigen::Index>((x << 6) | clock_index(l, 6))]);
    }
    CHECK_THAT(tail, WithinAbs(4.0 / 7.0, 1e-14));
    CHECK(simulate(padded).states.back().isApprox(simulate(three).states.back()));
}

TEST_CASE("ensure_min_length pads single-gate circuits") {
    const Circuit one{1, {gates::X(0)}};
    CHECK(ensure_min_length(one).length() == 2);
    const Circuit two{1, {gates::X(0), gates::H(0)}};
    CHECK(ensure_min_length(two).length() == 2);
}

TEST_CASE("grid layout of a circuit that is already one round") {
    // n=2 round: one-qubit gate on q0, two-qubit gate on (q0,q1), identities.
    const Circuit round{2, {gates::H(0), gates::CNOT(0, 1), gates::I(1), gates::I(0)}};
    const GridLayoutCircuit layout = to_grid_layout(round);
    CHECK(layout.R == 1);
    CHECK(layout.length() == 4);
    CHECK(simulate(layout.to_circuit()).states.back().isApprox(simulate(round).states.back(), 1e-12));
}

TEST_CASE("grid layout of the identity circuit") {
    const GridLayoutCircuit layout = to_grid_layout(Circuit{2, {gates::I(0), gates::I(1)}});
    CHECK(layout.R == 1);
    for (const auto &g : layout.gates) CHECK(g.is_identity());
}

TEST_CASE("grid layout routes non-adjacent gates") {
    const Circuit c{3, {gates::X(0), gates::CNOT(0, 2)}};
    const GridLayoutCircuit layout = to_grid_layout(c);
    layout.validate();
    CHECK(layout.R >= 2);
    CHECK((simulate(layout.to_circuit()).states.back() - simulate(c).states.back()).norm() < 1e-12);

    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Circuit r = random_circuit(2 + trial % 3, 1 + trial % 5, rng);
        const GridLayoutCircuit lr = to_grid_layout(r);
        lr.validate();
        CHECK((simulate(lr.to_circuit()).states.back() - simulate(r).states.back()).norm() < 1e-12);
    }
}

TEST_CASE("identity rounds extend the layout without changing the output") {
    const GridLayoutCircuit layout = to_grid_layout(Circuit{2, {gates::H(0), gates::CNOT(0, 1)}});
    const GridLayoutCircuit padded = pad_identity_rounds(layout, 2);
    CHECK(padded.R == layout.R + 2);
    CHECK(padded.length() == layout.length() + 8);
    CHECK(simulate(padded.to_circuit()).states.back().isApprox(simulate(layout.to_circuit()).states.back()));
}
