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
#include <random>

#include <Eigen/Eigenvalues>

#include "catch_amalgamated.hpp"

#include "adiaforge/eigen.hpp"
#include "adiaforge/kitaev3.hpp"
#include "adiaforge/kitaev5.hpp"
#include "adiaforge/random.hpp"
#include "adiaforge/subspace.hpp"

using namespace adiaforge;
using Catch::Matchers::WithinAbs;

namespace {

Matrix diag(std::initializer_list<double> d) {
    Vector v(static_cast<Eigen::Index>(d.size()));
    Eigen::Index i = 0;
    for (double x : d) v[i++] = x;
    return v.asDiagonal();
}

const Circuit kBell{2, {gates::H(0), gates::CNOT(0, 1)}};

}  // namespace

TEST_CASE("dense eigen_low examples") {
    const Spectrum a = eigen_low(diag({0, 1, 1}), 2);
    CHECK_THAT(a.ground, WithinAbs(0.0, 1e-15));
    CHECK_THAT(a.gap, WithinAbs(1.0, 1e-15));
    CHECK_FALSE(a.degenerate);

    const Spectrum b = eigen_low(s0_closed_form(1.0, 2).cast<Complex>(), 3);
    CHECK_THAT(b.eigenvalues[0], WithinAbs(0.0, 1e-14));
    CHECK_THAT(b.eigenvalues[1], WithinAbs(0.5, 1e-14));
    CHECK_THAT(b.eigenvalues[2], WithinAbs(1.5, 1e-14));

    const Spectrum c = eigen_low(Matrix(Matrix::Identity(4, 4)), 2);
    CHECK(c.degenerate);
    CHECK(c.gap == 0.0);
}

TEST_CASE("residuals and ordering") {
    Rng rng(1);
    const Matrix H = random_hermitian(30, rng);
    const Spectrum sp = eigen_low(H, 5);
    for (int i = 0; i < 5; ++i) {
        CHECK(sp.residuals[i] <= 1e-9);
        if (i) CHECK(sp.eigenvalues[i] >= sp.eigenvalues[i - 1]);
    }
}

TEST_CASE("fix_phase rotates the largest entry to real positive") {
    Vector v(3);
    v << Complex(0.1, 0.0), Complex(0.0, -0.9), Complex(0.2, 0.1);
    fix_phase(v);
    CHECK(std::abs(v[1].imag()) < 1e-15);
    CHECK(v[1].real() > 0.0);
    Vector tie(2);
    tie << Complex(0.0, 1.0), Complex(-1.0, 0.0);
    fix_phase(tie);
    CHECK_THAT(tie[0].real(), WithinAbs(1.0, 1e-15));
}

TEST_CASE("eigenvalues do not depend on basis order") {
    Rng rng(2);
    const Matrix H = random_hermitian(12, rng);
    Eigen::PermutationMatrix<Eigen::Dynamic> perm(12);
    perm.setIdentity();
    std::shuffle(perm.indices().data(), perm.indices().data() + 12, rng);
    const Matrix Hp = perm * H * perm.transpose();
    CHECK((eigen_low(H, 12, false).eigenvalues - eigen_low(Hp, 12, false).eigenvalues).norm() < 1e-9);
}

TEST_CASE("Lanczos agrees with the dense solver") {
    Rng rng(4);
    // Sparse-ish Hermitian operator on 600 states with a clear low spectrum.
    const Eigen::Index dim = 600;
    Matrix H = Matrix::Zero(dim, dim);
    std::uniform_real_distribution<double> u(-0.3, 0.3);
    for (Eigen::Index i = 0; i < dim; ++i) {
        H(i, i) = static_cast<double>(i % 37) / 5.0;
        if (i + 1 < dim) H(i, i + 1) = H(i + 1, i) = u(rng);
        if (i + 7 < dim) H(i, i + 7) = H(i + 7, i) = Complex(0.0, u(rng)) * 0.5;
    }
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < i; ++j) H(j, i) = std::conj(H(i, j));
    }
    const Spectrum dense = eigen_low(H, 3);
    const Spectrum lan = lanczos_low([&](const Vector &v) { return Vector(H * v); }, dim, 3);
    for (int i = 0; i < 3; ++i) {
        CHECK_THAT(lan.eigenvalues[i], WithinAbs(dense.eigenvalues[i], 1e-8));
        CHECK(lan.residuals[i] <= 1e-8);
    }
    CHECK(lan.iterations > 0);
}

TEST_CASE("sparse eigen_low on an assembled program") {
    const AdiabaticProgram p = build_5local(pad_identities(kBell, 1.0));
    const SparseMatrix A = assemble(interpolate(p, 0.5));
    const Spectrum s = eigen_low(A, 2);
    const Spectrum d = eigen_low(Matrix(A), 2);
    CHECK_THAT(s.ground, WithinAbs(d.ground, 1e-10));
}

TEST_CASE("closed form examples") {
    CHECK((s0_closed_form(0.0, 2) - RealMatrix(diag({0, 1, 1}).real())).norm() == 0.0);
    RealMatrix f(3, 3);
    f << 0.5, -0.5, 0, -0.5, 1, -0.5, 0, -0.5, 0.5;
    CHECK((s0_closed_form(1.0, 2) - f).norm() < 1e-15);
    const Spectrum two = eigen_low(s0_closed_form(1.0, 1).cast<Complex>(), 2);
    CHECK_THAT(two.gap, WithinAbs(1.0, 1e-14));
    CHECK_THROWS_AS(s0_closed_form(1.5, 2), ValidationError);
}

TEST_CASE("restriction of the Bell program") {
    const AdiabaticProgram p5 = build_5local(kBell);
    const SubspaceBasis b = subspace_basis(p5, SubspaceMode::S0);
    CHECK(b.orthonormality_error() < 1e-12);
    CHECK((restrict(interpolate(p5, 0.3), b).matrix - s0_closed_form(0.3, 2).cast<Complex>()).norm() < 1e-10);

    const AdiabaticProgram p3 = build_3local(kBell);
    const SubspaceBasis b3 = subspace_basis(p3, SubspaceMode::S0);
    double worst = 0.0;
    for (double s : {0.0, 0.5, 1.0}) {
        CHECK((restrict(interpolate(p3, s), b3).matrix - s0_closed_form(s, 2).cast<Complex>()).norm() < 1e-10);
        CHECK(invariance_residual(interpolate(p5, s), b) <= 1e-10);
        worst = std::max(worst, invariance_residual(interpolate(p3, s), b3));
    }
    CHECK(worst > 1e-3);
}

TEST_CASE("invariance residual of a dense operator") {
    const Matrix H = diag({0, 1, 2});
    Matrix B = Matrix::Zero(3, 1);
    B(0, 0) = 1.0;
    CHECK(invariance_residual(H, B) < 1e-15);
    Matrix M = H;
    M(0, 1) = M(1, 0) = 0.25;
    CHECK_THAT(invariance_residual(M, B), WithinAbs(0.25, 1e-14));
}

TEST_CASE("block decomposition of S") {
    const Circuit c = pad_identities(kBell, 1.0);
    const AdiabaticProgram p = build_5local(c);
    const BlockDecomposition d = block_decompose_S(p, 0.5);
    REQUIRE(d.blocks.size() == 4);
    CHECK(d.off_block_norm <= 1e-10);
    CHECK((d.blocks[0].matrix - s0_closed_form(0.5, 4).cast<Complex>()).norm() < 1e-10);
    for (int j = 1; j < 4; ++j) {
        const Matrix extra = d.blocks[static_cast<std::size_t>(j)].matrix - s0_closed_form(0.5, 4).cast<Complex>();
        CHECK((extra - Matrix(extra.diagonal().asDiagonal())).norm() < 1e-10);
        CHECK(d.blocks[static_cast<std::size_t>(j)].matrix(0, 0).real() >= 1.0);
    }
}

TEST_CASE("restricted spectrum is part of the full spectrum") {
    const AdiabaticProgram p = build_5local(kBell);
    const SubspaceBasis b = subspace_basis(p, SubspaceMode::S0);
    const HamiltonianSum h = interpolate(p, 0.6);
    REQUIRE(invariance_residual(h, b) <= 1e-10);
    const Spectrum full = eigen_low(assemble_dense(h), 16, false);
    const Spectrum part = eigen_low(restrict(h, b).matrix, b.size(), false);
    for (Eigen::Index i = 0; i < part.eigenvalues.size(); ++i) {
        CHECK((full.eigenvalues.array() - part.eigenvalues[i]).abs().minCoeff() <= 1e-8);
    }
}

TEST_CASE("subspace mode names") {
    for (SubspaceMode m : {SubspaceMode::Full, SubspaceMode::S, SubspaceMode::S0}) {
        CHECK(subspace_mode_from_string(to_string(m)) == m);
    }
    CHECK_THROWS_AS(subspace_mode_from_string("T"), ValidationError);
}
