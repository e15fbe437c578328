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

#include "adiaforge/local_hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace adiaforge {

namespace {

// Digit offsets of every local basis index inside the global index, plus the
// strides of the support particles.
struct Embedding {
    std::vector<BasisIndex> strides;
    std::vector<BasisIndex> offsets;

    Embedding(const LocalTerm &term, int particle_count, int d) {
        const int k = term.size();
        strides.resize(k);
        for (int p = 0; p < k; ++p) {
            strides[p] = checked_pow(d, particle_count - 1 - term.support[p]);
        }
        const BasisIndex local = checked_pow(d, k);
        offsets.resize(local);
        for (BasisIndex a = 0; a < local; ++a) {
            BasisIndex rest = a;
            BasisIndex off = 0;
            for (int p = k - 1; p >= 0; --p) {
                off += (rest % d) * strides[p];
                rest /= d;
            }
            offsets[a] = off;
        }
    }

    // Local index of global basis state b, and b with the support digits cleared.
    std::pair<BasisIndex, BasisIndex> split(BasisIndex b, int d) const {
        BasisIndex loc = 0;
        BasisIndex base = b;
        for (std::size_t p = 0; p < strides.size(); ++p) {
            const BasisIndex digit = (b / strides[p]) % d;
            loc = loc * d + digit;
            base -= digit * strides[p];
        }
        return {loc, base};
    }
};

// Nonzero entries of each column of coefficient * matrix.
std::vector<std::vector<std::pair<BasisIndex, Complex>>> column_entries(const LocalTerm &term) {
    std::vector<std::vector<std::pair<BasisIndex, Complex>>> cols(term.matrix.cols());
    for (Eigen::Index c = 0; c < term.matrix.cols(); ++c) {
        for (Eigen::Index r = 0; r < term.matrix.rows(); ++r) {
            const Complex v = term.matrix(r, c);
            if (v != Complex(0.0)) {
                cols[c].emplace_back(static_cast<BasisIndex>(r), term.coefficient * v);
            }
        }
    }
    return cols;
}

bool same_term(const LocalTerm &a, const LocalTerm &b) {
    return a.support == b.support && a.coefficient == b.coefficient && a.label == b.label &&
           a.matrix.rows() == b.matrix.rows() && a.matrix == b.matrix;
}

}  // namespace

LocalTerm make_term(const std::vector<int> &particles, const Matrix &op, int particle_dim, double coefficient,
                    std::string label) {
    const int k = static_cast<int>(particles.size());
    const BasisIndex side = checked_pow(particle_dim, k);
    if (static_cast<BasisIndex>(op.rows()) != side || op.rows() != op.cols()) {
        throw ValidationError("make_term: operator side does not match support size");
    }
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return particles[a] < particles[b]; });
    for (int i = 1; i < k; ++i) {
        if (particles[order[i]] == particles[order[i - 1]]) {
            throw ValidationError("make_term: repeated particle " + std::to_string(particles[order[i]]));
        }
    }

    // perm[new] = old local index.
    std::vector<Eigen::Index> perm(side);
    std::vector<int> digits(k);
    for (BasisIndex a = 0; a < side; ++a) {
        BasisIndex rest = a;
        for (int p = k - 1; p >= 0; --p) {
            digits[p] = static_cast<int>(rest % particle_dim);
            rest /= particle_dim;
        }
        // digits are in sorted order; digit p belongs to original slot order[p].
        std::vector<int> original(k);
        for (int p = 0; p < k; ++p) original[order[p]] = digits[p];
        BasisIndex old = 0;
        for (int p = 0; p < k; ++p) old = old * particle_dim + original[p];
        perm[a] = static_cast<Eigen::Index>(old);
    }

    LocalTerm term;
    term.support.resize(k);
    for (int p = 0; p < k; ++p) term.support[p] = particles[order[p]];
    term.matrix.resize(op.rows(), op.cols());
    for (BasisIndex r = 0; r < side; ++r) {
        for (BasisIndex c = 0; c < side; ++c) {
            term.matrix(r, c) = op(perm[r], perm[c]);
        }
    }
    term.coefficient = coefficient;
    term.label = std::move(label);
    return term;
}

BasisIndex HamiltonianSum::dimension() const {
    return checked_pow(particle_dim, particle_count);
}

int HamiltonianSum::locality() const {
    int k = 0;
    for (const auto &t : terms) k = std::max(k, t.size());
    return k;
}

void HamiltonianSum::validate() const {
    if (particle_count < 1 || particle_dim < 2) {
        throw ValidationError("hamiltonian: need particle_count >= 1 and particle_dim >= 2");
    }
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto &t = terms[i];
        const std::string where = "term " + std::to_string(i);
        if (t.support.empty()) {
            throw ValidationError(where + ": empty support");
        }
        for (int p = 0; p < t.size(); ++p) {
            if (t.support[p] < 0 || t.support[p] >= particle_count) {
                throw ValidationError(where + ": particle " + std::to_string(t.support[p]) + " out of range");
            }
            if (p > 0 && t.support[p] <= t.support[p - 1]) {
                throw ValidationError(where + ": support must be sorted and distinct");
            }
        }
        const BasisIndex side = checked_pow(particle_dim, t.size());
        if (static_cast<BasisIndex>(t.matrix.rows()) != side || t.matrix.rows() != t.matrix.cols()) {
            throw ValidationError(where + ": matrix side must be " + std::to_string(side));
        }
        if ((t.matrix - t.matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
            throw ValidationError(where + ": matrix is not Hermitian");
        }
        if (!std::isfinite(t.coefficient)) {
            throw ValidationError(where + ": non-finite coefficient");
        }
    }
}

void HamiltonianSum::append(const HamiltonianSum &other, double scale) {
    for (auto t : other.terms) {
        t.coefficient *= scale;
        terms.push_back(std::move(t));
    }
}

HamiltonianSum HamiltonianSum::filter(const std::function<bool(const std::string &)> &keep) const {
    HamiltonianSum out{particle_count, particle_dim, {}};
    for (const auto &t : terms) {
        if (keep(t.label)) out.terms.push_back(t);
    }
    return out;
}

std::string to_string(Flavor flavor) {
    switch (flavor) {
    case Flavor::FiveLocal:
        return "5local";
    case Flavor::ThreeLocal:
        return "3local";
    case Flavor::Grid:
        return "grid";
    }
    return "unknown";
}

Flavor flavor_from_string(const std::string &text) {
    if (text == "5local") return Flavor::FiveLocal;
    if (text == "3local") return Flavor::ThreeLocal;
    if (text == "grid") return Flavor::Grid;
    throw ValidationError("unknown flavor '" + text + "' (expected 5local, 3local or grid)");
}

int AdiabaticProgram::locality() const {
    return std::max(h_init.locality(), h_final.locality());
}

void AdiabaticProgram::validate() const {
    if (h_init.particle_count != h_final.particle_count || h_init.particle_dim != h_final.particle_dim) {
        throw ValidationError("program: h_init and h_final live on different spaces");
    }
    h_init.validate();
    h_final.validate();
}

HamiltonianSum interpolate(const AdiabaticProgram &program, double s) {
    if (!(s >= 0.0 && s <= 1.0)) {
        throw ValidationError("interpolate: s must lie in [0, 1]");
    }
    const auto &init = program.h_init.terms;
    const auto &fin = program.h_final.terms;

    std::map<std::vector<int>, std::vector<std::size_t>> by_support;
    for (std::size_t i = 0; i < init.size(); ++i) by_support[init[i].support].push_back(i);

    std::vector<double> init_weight(init.size(), 1.0 - s);
    std::vector<bool> used(init.size(), false);
    std::vector<LocalTerm> final_only;
    for (const auto &t : fin) {
        bool merged = false;
        auto it = by_support.find(t.support);
        if (it != by_support.end()) {
            for (std::size_t i : it->second) {
                if (!used[i] && same_term(init[i], t)) {
                    used[i] = true;
                    init_weight[i] = 1.0;
                    merged = true;
                    break;
                }
            }
        }
        if (!merged && s != 0.0) {
            LocalTerm scaled = t;
            scaled.coefficient *= s;
            final_only.push_back(std::move(scaled));
        }
    }

    HamiltonianSum out{program.h_init.particle_count, program.h_init.particle_dim, {}};
    for (std::size_t i = 0; i < init.size(); ++i) {
        if (init_weight[i] == 0.0) continue;
        LocalTerm t = init[i];
        t.coefficient *= init_weight[i];
        out.terms.push_back(std::move(t));
    }
    for (auto &t : final_only) out.terms.push_back(std::move(t));
    return out;
}

SparseMatrix assemble(const HamiltonianSum &sum, BasisIndex cap) {
    const BasisIndex dim = sum.dimension();
    if (dim > cap) {
        throw ValidationError("assembly cap exceeded: dimension " + std::to_string(dim) + " > " +
                              std::to_string(cap) + " (use matrix-free apply)");
    }
    const int d = sum.particle_dim;
    using Triplet = Eigen::Triplet<Complex, std::int64_t>;
    std::vector<Triplet> triplets;
    for (const auto &t : sum.terms) {
        if (t.coefficient == 0.0) continue;
        const Embedding emb(t, sum.particle_count, d);
        const auto cols = column_entries(t);
        for (BasisIndex b = 0; b < dim; ++b) {
            const auto [loc, base] = emb.split(b, d);
            for (const auto &[r, v] : cols[loc]) {
                triplets.emplace_back(static_cast<std::int64_t>(base + emb.offsets[r]), static_cast<std::int64_t>(b),
                                      v);
            }
        }
    }
    SparseMatrix m(static_cast<std::int64_t>(dim), static_cast<std::int64_t>(dim));
    m.setFromTriplets(triplets.begin(), triplets.end());
    m.prune(Complex(0.0));
    return m;
}

Matrix assemble_dense(const HamiltonianSum &sum) {
    const BasisIndex dim = sum.dimension();
    if (dim > 4096) {
        throw ValidationError("dense assembly cap exceeded: dimension " + std::to_string(dim) + " > 4096");
    }
    return Matrix(assemble(sum));
}

Vector apply(const HamiltonianSum &sum, const Vector &v) {
    const BasisIndex dim = sum.dimension();
    if (static_cast<BasisIndex>(v.size()) != dim) {
        throw ValidationError("apply: vector dimension " + std::to_string(v.size()) + " != " + std::to_string(dim));
    }
    const int d = sum.particle_dim;
    Vector out = Vector::Zero(v.size());
    for (const auto &t : sum.terms) {
        if (t.coefficient == 0.0) continue;
        const Embedding emb(t, sum.particle_count, d);
        const auto cols = column_entries(t);
        for (BasisIndex b = 0; b < dim; ++b) {
            const Complex x = v[static_cast<Eigen::Index>(b)];
            if (x == Complex(0.0)) continue;
            const auto [loc, base] = emb.split(b, d);
            for (const auto &[r, m] : cols[loc]) {
                out[static_cast<Eigen::Index>(base + emb.offsets[r])] += m * x;
            }
        }
    }
    return out;
}

SparseVector apply(const HamiltonianSum &sum, const SparseVector &v) {
    const BasisIndex dim = sum.dimension();
    if (v.dimension() != dim) {
        throw ValidationError("apply: vector dimension " + std::to_string(v.dimension()) + " != " +
                              std::to_string(dim));
    }
    const int d = sum.particle_dim;
    std::vector<SparseVector::Entry> out;
    for (const auto &t : sum.terms) {
        if (t.coefficient == 0.0) continue;
        const Embedding emb(t, sum.particle_count, d);
        const auto cols = column_entries(t);
        for (const auto &[b, x] : v.entries()) {
            const auto [loc, base] = emb.split(b, d);
            for (const auto &[r, m] : cols[loc]) {
                out.emplace_back(base + emb.offsets[r], m * x);
            }
        }
    }
    return SparseVector(dim, std::move(out));
}

double hermitian_norm(const Matrix &m) {
    if (m.size() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

double norm_bound(const HamiltonianSum &sum) {
    double total = 0.0;
    for (const auto &t : sum.terms) {
        if (t.coefficient == 0.0) continue;
        total += std::abs(t.coefficient) * hermitian_norm(t.matrix);
    }
    return total;
}

}  // namespace adiaforge
