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

#include "adiaforge/random.hpp"

#include <Eigen/QR>

namespace adiaforge {

Circuit random_circuit(int n, int L, Rng &rng) {
    if (n < 1 || L < 1) throw ValidationError("random_circuit: need n >= 1 and L >= 1");
    Circuit c;
    c.n = n;
    std::uniform_int_distribution<int> kind(0, n >= 2 ? 3 : 1);
    std::uniform_int_distribution<int> qubit(0, n - 1);
    for (int l = 0; l < L; ++l) {
        const int k = kind(rng);
        const int a = qubit(rng);
        int b = a;
        if (k >= 2) {
            while (b == a) b = qubit(rng);
        }
        switch (k) {
            case 0: c.gates.push_back(gates::X(a)); break;
            case 1: c.gates.push_back(gates::H(a)); break;
            case 2: c.gates.push_back(gates::CNOT(a, b)); break;
            default: c.gates.push_back(gates::SWAP(a, b)); break;
        }
    }
    return c;
}

Matrix random_hermitian(Eigen::Index dim, Rng &rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) m(r, c) = Complex(u(rng), u(rng));
    }
    return (m + m.adjoint()) / 2.0;
}

Matrix random_isometry(Eigen::Index dim, Eigen::Index cols, Rng &rng) {
    if (cols > dim) throw ValidationError("random_isometry: more columns than the dimension");
    std::normal_distribution<double> g;
    Matrix m(dim, cols);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = Complex(g(rng), g(rng));
    }
    Eigen::HouseholderQR<Matrix> qr(m);
    return qr.householderQ() * Matrix::Identity(dim, cols);
}

}  // namespace adiaforge
