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

#include "adiaforge/subspace.hpp"

#include <cmath>

#include "adiaforge/grid6.hpp"

namespace adiaforge {

Matrix SubspaceBasis::dense() const {
    if (dimension > (BasisIndex{1} << 16)) {
        throw ValidationError("dense basis cap exceeded: dimension " + std::to_string(dimension));
    }
    Matrix B = Matrix::Zero(static_cast<Eigen::Index>(dimension), size());
    for (int c = 0; c < size(); ++c) {
        for (const auto &[i, v] : vectors[static_cast<std::size_t>(c)].entries()) {
            B(static_cast<Eigen::Index>(i), c) = v;
        }
    }
    return B;
}

double SubspaceBasis::orthonormality_error() const {
    double err = 0.0;
    for (int a = 0; a < size(); ++a) {
        for (int b = a; b < size(); ++b) {
            const Complex g = vectors[static_cast<std::size_t>(a)].dot(vectors[static_cast<std::size_t>(b)]);
            err = std::max(err, std::abs(g - Complex(a == b ? 1.0 : 0.0)));
        }
    }
    return err;
}

SparseVector SubspaceBasis::lift(const Vector &coefficients) const {
    if (coefficients.size() != size()) {
        throw ValidationError("lift: coefficient count does not match basis size");
    }
    std::vector<SparseVector::Entry> entries;
    for (int c = 0; c < size(); ++c) {
        for (const auto &[i, v] : vectors[static_cast<std::size_t>(c)].entries()) {
            entries.emplace_back(i, coefficients[c] * v);
        }
    }
    return SparseVector(dimension, std::move(entries));
}

std::string to_string(SubspaceMode mode) {
    switch (mode) {
    case SubspaceMode::Full:
        return "full";
    case SubspaceMode::S:
        return "S";
    case SubspaceMode::S0:
        return "S0";
    }
    return "unknown";
}

SubspaceMode subspace_mode_from_string(const std::string &text) {
    if (text == "full") return SubspaceMode::Full;
    if (text == "S") return SubspaceMode::S;
    if (text == "S0") return SubspaceMode::S0;
    throw ValidationError("unknown mode '" + text + "' (expected full, S or S0)");
}

std::vector<SparseVector> gamma_basis_5local(const Circuit &circuit, BasisIndex j) {
    circuit.validate();
    const int n = circuit.n;
    const int L = circuit.length();
    if (j >= (BasisIndex{1} << n)) {
        throw ValidationError("gamma basis: j out of range");
    }
    if (n + L > 62) {
        throw ValidationError("gamma basis: n + L exceeds 62 qubits");
    }
    const BasisIndex dim = BasisIndex{1} << (n + L);
    const auto trace = simulate(circuit, j);
    std::vector<SparseVector> out;
    for (int l = 0; l <= L; ++l) {
        const Vector &alpha = trace.states[static_cast<std::size_t>(l)];
        std::vector<SparseVector::Entry> entries;
        for (Eigen::Index x = 0; x < alpha.size(); ++x) {
            entries.emplace_back((static_cast<BasisIndex>(x) << L) | clock_index(l, L), alpha[x]);
        }
        out.emplace_back(dim, std::move(entries));
    }
    return out;
}

namespace {

GridLayoutCircuit layout_of(const AdiabaticProgram &program) {
    return GridLayoutCircuit{program.n, program.R, program.circuit.gates};
}

}  // namespace

std::vector<SparseVector> gamma_basis(const AdiabaticProgram &program, BasisIndex j) {
    if (program.flavor == Flavor::Grid) return grid_gamma_basis(layout_of(program), j);
    return gamma_basis_5local(program.circuit, j);
}

BasisIndex legal_index(const AdiabaticProgram &program, int l, BasisIndex x) {
    const int n = program.n;
    const int L = program.L;
    if (l < 0 || l > L || x >= (BasisIndex{1} << n)) {
        throw ValidationError("legal_index: (l, x) out of range");
    }
    if (program.flavor != Flavor::Grid) {
        return (x << L) | clock_index(l, L);
    }
    const int R = program.R;
    const int N = n * (R + 1);
    const GridShape shape = legal_shape(l, n, R);
    BasisIndex idx = 0;
    for (int i = 1; i <= n; ++i) {
        const int bit = static_cast<int>((x >> (n - i)) & 1);
        for (int c = 0; c <= R; ++c) {
            int state = 0;
            switch (shape.at(i, c)) {
            case Phase::Unborn:
                state = 0;
                break;
            case Phase::First:
                state = 1 + bit;
                break;
            case Phase::Second:
                state = 3 + bit;
                break;
            case Phase::Dead:
                state = 5;
                break;
            }
            idx += static_cast<BasisIndex>(state) * checked_pow(6, N - 1 - grid_site(i, c, R));
        }
    }
    return idx;
}

SubspaceBasis subspace_basis(const AdiabaticProgram &program, SubspaceMode mode) {
    SubspaceBasis basis;
    basis.dimension = program.h_init.dimension();
    if (mode == SubspaceMode::Full) {
        throw ValidationError("subspace_basis: full mode has no restricted basis");
    }
    const BasisIndex blocks = mode == SubspaceMode::S0 ? 1 : (BasisIndex{1} << program.n);
    for (BasisIndex j = 0; j < blocks; ++j) {
        for (auto &v : gamma_basis(program, j)) basis.vectors.push_back(std::move(v));
    }
    return basis;
}

SparseVector history_state(const AdiabaticProgram &program) {
    const auto gammas = gamma_basis(program, 0);
    SparseVector eta(program.h_init.dimension());
    const double w = 1.0 / std::sqrt(static_cast<double>(gammas.size()));
    for (const auto &g : gammas) eta.axpy(w, g);
    return eta;
}

SparseVector initial_state(const AdiabaticProgram &program) {
    return gamma_basis(program, 0).front();
}

RestrictedOperator restrict(const HamiltonianSum &sum, const SubspaceBasis &basis) {
    RestrictedOperator out{basis, Matrix::Zero(basis.size(), basis.size())};
    for (int c = 0; c < basis.size(); ++c) {
        const SparseVector hb = apply(sum, basis.vectors[static_cast<std::size_t>(c)]);
        for (int r = 0; r < basis.size(); ++r) {
            out.matrix(r, c) = basis.vectors[static_cast<std::size_t>(r)].dot(hb);
        }
    }
    return out;
}

RestrictedOperator restrict(const Matrix &H, const Matrix &basis) {
    RestrictedOperator out;
    out.basis.dimension = static_cast<BasisIndex>(basis.rows());
    for (Eigen::Index c = 0; c < basis.cols(); ++c) {
        out.basis.vectors.push_back(SparseVector::from_dense(basis.col(c)));
    }
    out.matrix = basis.adjoint() * H * basis;
    return out;
}

namespace {

double spectral_norm_from_gram(const Matrix &gram) {
    if (gram.size() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

}  // namespace

double invariance_residual(const HamiltonianSum &sum, const SubspaceBasis &basis) {
    const int m = basis.size();
    std::vector<SparseVector> hb;
    hb.reserve(static_cast<std::size_t>(m));
    for (const auto &b : basis.vectors) hb.push_back(apply(sum, b));
    Matrix M(m, m);
    for (int c = 0; c < m; ++c) {
        for (int r = 0; r < m; ++r) M(r, c) = basis.vectors[static_cast<std::size_t>(r)].dot(hb[static_cast<std::size_t>(c)]);
    }
    // Columns of HB - B M, formed explicitly to avoid cancellation.
    std::vector<SparseVector> res = hb;
    for (int c = 0; c < m; ++c) {
        for (int r = 0; r < m; ++r) res[static_cast<std::size_t>(c)].axpy(-M(r, c), basis.vectors[static_cast<std::size_t>(r)]);
    }
    Matrix gram(m, m);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) gram(a, b) = res[static_cast<std::size_t>(a)].dot(res[static_cast<std::size_t>(b)]);
    }
    return spectral_norm_from_gram(gram);
}

double invariance_residual(const Matrix &H, const Matrix &basis) {
    const Matrix HB = H * basis;
    const Matrix res = HB - basis * (basis.adjoint() * HB);
    return spectral_norm_from_gram(res.adjoint() * res);
}

BlockDecomposition block_decompose_S(const AdiabaticProgram &program, double s) {
    const HamiltonianSum h = interpolate(program, s);
    const SubspaceBasis full = subspace_basis(program, SubspaceMode::S);
    const RestrictedOperator op = restrict(h, full);
    const int block = program.L + 1;
    const int count = full.size() / block;
    BlockDecomposition out;
    for (int j = 0; j < count; ++j) {
        RestrictedOperator b;
        b.basis.dimension = full.dimension;
        for (int l = 0; l < block; ++l) b.basis.vectors.push_back(full.vectors[static_cast<std::size_t>(j * block + l)]);
        b.matrix = op.matrix.block(j * block, j * block, block, block);
        out.blocks.push_back(std::move(b));
        for (int j2 = 0; j2 < count; ++j2) {
            if (j2 == j) continue;
            out.off_block_norm =
                std::max(out.off_block_norm, op.matrix.block(j * block, j2 * block, block, block).cwiseAbs().maxCoeff());
        }
    }
    return out;
}

}  // namespace adiaforge
