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

#include <Eigen/Eigenvalues>

#include "catch_amalgamated.hpp"

#include "adiaforge/eigen.hpp"
#include "adiaforge/lemmas.hpp"
#include "adiaforge/local_hamiltonian.hpp"
#include "adiaforge/random.hpp"

using namespace adiaforge;
using Catch::Matchers::WithinAbs;

TEST_CASE("monotone vectors") {
    Vector a(3);
    a << 1.0, 0.0, 0.0;
    CHECK(check_monotone(a, 1e-12));
    CHECK(check_monotone(Vector(Vector::Constant(5, 0.3)), 1e-12));
    Vector b(3);
    b << 0.2, 0.5, 0.1;
    CHECK_FALSE(check_monotone(b, 1e-9));
    RealVector neg(2);
    neg << 0.5, -0.1;
    CHECK_FALSE(check_monotone(neg, 1e-9));
    // A global phase does not matter.
    CHECK(check_monotone(Vector(a * Complex(0.0, -1.0)), 1e-12));
}

TEST_CASE("closed-form ground states are monotone") {
    for (int L : {8, 16}) {
        for (int k = 0; k <= 20; ++k) {
            const Spectrum sp = eigen_low(s0_closed_form(k / 20.0, L).cast<Complex>(), 1);
            CHECK(check_monotone(Vector(sp.eigenvectors.col(0)), 1e-9));
        }
    }
}

TEST_CASE("Gerschgorin on a diagonal matrix") {
    Vector d(3);
    d << 0.0, 1.0, 1.0;
    const GerschgorinReport g = gerschgorin(Matrix(d.asDiagonal()));
    REQUIRE(g.components.size() == 2);
    CHECK(g.components[0].eigenvalue_count == 1);
    CHECK(g.components[1].eigenvalue_count == 2);
    CHECK(g.all_contained);
    CHECK(g.counts_match);
}

TEST_CASE("Gerschgorin split below one third") {
    for (int L = 2; L <= 12; ++L) {
        for (double s : {0.0, 0.1, 0.2, 0.3, 0.33}) {
            const GerschgorinReport g = gerschgorin(s0_closed_form(s, L).cast<Complex>());
            REQUIRE(g.components.size() >= 2);
            CHECK(g.components[0].discs.size() == 1);
            CHECK(g.components[0].eigenvalue_count == 1);
            CHECK(g.eigenvalues[0] < 1.0 / 3.0);
            CHECK(g.eigenvalues[1] > 2.0 / 3.0);
        }
    }
}

TEST_CASE("Gerschgorin discs contain random spectra") {
    Rng rng(8);
    for (int t = 0; t < 20; ++t) {
        const Matrix H = random_hermitian(8, rng);
        const GerschgorinReport g = gerschgorin(H);
        CHECK(g.all_contained);
        CHECK(g.counts_match);
    }
}

TEST_CASE("leak lemma with no perturbation") {
    Matrix S = Matrix::Zero(4, 2);
    S(0, 0) = S(1, 1) = 1.0;
    const LeakReport r = leak_certify(Matrix(Matrix::Zero(4, 4)), S, 10.0);
    CHECK(r.a_full == 0.0);
    CHECK(r.a == 0.0);
    CHECK(r.K == 0.0);
}

TEST_CASE("leak lemma on random instances") {
    Rng rng(12);
    for (int t = 0; t < 50; ++t) {
        std::uniform_int_distribution<int> dim_d(3, 64);
        const int dim = dim_d(rng);
        std::uniform_int_distribution<int> sub_d(2, dim - 1);
        const Matrix S = random_isometry(dim, sub_d(rng), rng);
        const Matrix H1 = random_hermitian(dim, rng);
        std::uniform_real_distribution<double> f(2.2, 40.0);
        const double J = f(rng) * hermitian_norm(H1);
        const LeakReport r = leak_certify(H1, S, J);
        CHECK(r.hypothesis);
        CHECK(r.lower_ok);
        CHECK(r.upper_ok);
        CHECK(r.second_ok);
        CHECK(r.overlap_ok);
    }
}

TEST_CASE("leak lemma hypothesis is enforced") {
    Rng rng(13);
    const Matrix H1 = random_hermitian(6, rng);
    const Matrix S = random_isometry(6, 3, rng);
    CHECK_THROWS_AS(leak_certify(H1, S, 1.5 * hermitian_norm(H1)), ValidationError);
}

TEST_CASE("angle lemma worked instance") {
    Matrix H1 = Matrix::Zero(2, 2);
    H1(1, 1) = 1.0;
    Matrix H2(2, 2);
    H2 << 0.5, -0.5, -0.5, 0.5;  // |-><-|
    const AngleReport r = angle_certify(H1, H2, 1.0);
    const double expected = 1.0 - std::sqrt(2.0) / 2.0;
    CHECK_THAT(r.bound, WithinAbs(expected, 1e-12));
    CHECK_THAT(r.actual, WithinAbs(expected, 1e-12));
    CHECK_THAT(r.theta, WithinAbs(M_PI / 4.0, 1e-12));
    CHECK(r.holds);
}

TEST_CASE("angle lemma with equal Hamiltonians") {
    Vector d(3);
    d << 0.3, 1.0, 2.0;
    const Matrix H(d.asDiagonal());
    const AngleReport r = angle_certify(H, H);
    CHECK_THAT(r.theta, WithinAbs(0.0, 1e-7));
    CHECK_THAT(r.bound, WithinAbs(0.6, 1e-12));
    CHECK_THAT(r.actual, WithinAbs(0.6, 1e-12));
}

TEST_CASE("angle lemma on random instances") {
    Rng rng(21);
    for (int t = 0; t < 20; ++t) {
        std::uniform_int_distribution<int> dim_d(2, 10);
        const int dim = dim_d(rng);
        const Matrix A = random_hermitian(dim, rng);
        const Matrix B = random_hermitian(dim, rng);
        const AngleReport r = angle_certify(A * A, B * B);
        CHECK(r.bound <= r.actual + 1e-12);
        CHECK(r.holds);
    }
}

TEST_CASE("angle lemma rejects an oversized Lambda") {
    Matrix H1 = Matrix::Zero(2, 2);
    H1(1, 1) = 1.0;
    CHECK_THROWS_AS(angle_certify(H1, H1, 2.0), ValidationError);
}

TEST_CASE("angle between the S0 ground space and a top-left penalty") {
    // Monotone ground states give alpha_0^2 >= 1/(L+1), so cos(theta) <= sqrt(L/(L+1)).
    for (int L = 2; L <= 12; ++L) {
        for (double s : {0.25, 0.5, 1.0}) {
            const Matrix H1 = s0_closed_form(s, L).cast<Complex>();
            Matrix M = Matrix::Zero(L + 1, L + 1);
            M(0, 0) = 1.0;
            const AngleReport r = angle_certify(H1, M);
            CHECK(std::cos(r.theta) <= std::sqrt(L / (L + 1.0)) + 1e-12);
            CHECK(r.bound - r.a1 - r.a2 > 0.0);
            CHECK(r.holds);
        }
    }
}
