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

#include "adiaforge/markov.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <cstdlib>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace adiaforge {

namespace {

// Smallest p with G^p entrywise positive, or 0 if none up to the Wielandt
// bound (n-1)^2 + 1.
int primitivity_power(const RealMatrix &G) {
    const Eigen::Index n = G.rows();
    using Pattern = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;
    Pattern A = (G.array() > 0.0).cast<int>();
    Pattern power = A;
    const long limit = static_cast<long>(n - 1) * static_cast<long>(n - 1) + 1;
    for (long p = 1; p <= limit; ++p) {
        if ((power.array() > 0).all()) return static_cast<int>(p);
        power = ((power * A).array() > 0).cast<int>();
    }
    return 0;
}

}  // namespace

namespace {

// Inverse iteration on A = M - sigma I with sigma below lambda0. A is a
// nonsingular M-matrix, and elimination without pivoting turns every solve
// into sums of nonnegative terms, so entries many orders of magnitude below
// the largest keep their relative accuracy.
RealVector perron_vector(const RealMatrix &M, double lambda0, double gap) {
    const Eigen::Index n = M.rows();
    const double shift = std::max(gap, 1e-12 * std::max(1.0, std::abs(lambda0)));
    RealMatrix A = M - (lambda0 - shift) * RealMatrix::Identity(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        if (!(A(k, k) > 0.0)) throw NumericalError("perron_chain: nonpositive pivot in the shifted M-matrix");
        for (Eigen::Index i = k + 1; i < n; ++i) {
            const double l = A(i, k) / A(k, k);
            A(i, k) = l;
            for (Eigen::Index j = k + 1; j < n; ++j) {
                if (i == j) {
                    A(i, j) -= l * A(k, j);
                } else {
                    A(i, j) = -(std::abs(A(i, j)) + std::abs(l * A(k, j)));
                }
            }
        }
    }
    RealVector x = RealVector::Ones(n);
    for (int it = 0; it < 1000; ++it) {
        RealVector y = x;
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index k = 0; k < i; ++k) y[i] += std::abs(A(i, k)) * y[k];
        }
        RealVector next(n);
        for (Eigen::Index i = n - 1; i >= 0; --i) {
            double acc = y[i];
            for (Eigen::Index j = i + 1; j < n; ++j) acc += std::abs(A(i, j)) * next[j];
            next[i] = acc / A(i, i);
        }
        next /= next.maxCoeff();
        const double change = (next.array() / x.array() - 1.0).abs().maxCoeff();
        x = next;
        if (change < 1e-15) break;
    }
    return x / x.norm();
}

}  // namespace

MarkovChain perron_chain(const RealMatrix &M) {
    const Eigen::Index n = M.rows();
    if (n < 1 || M.cols() != n) {
        throw ValidationError("perron_chain: M must be square and nonempty");
    }
    if ((M - M.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
        throw ValidationError("perron_chain: M must be symmetric");
    }
    const RealMatrix G = RealMatrix::Identity(n, n) - M;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (G(i, j) < 0.0) {
                std::ostringstream os;
                os << "perron_chain: G = I - M has negative entry " << G(i, j) << " at (" << i << ", " << j << ")";
                throw ValidationError(os.str());
            }
        }
    }
    MarkovChain chain;
    chain.primitivity_power = primitivity_power(G);
    if (chain.primitivity_power == 0) {
        throw ValidationError("perron_chain: G is not primitive (no positive power up to the Wielandt bound)");
    }

    Eigen::SelfAdjointEigenSolver<RealMatrix> es(M);
    chain.lambda0 = es.eigenvalues()[0];
    chain.delta_M = n >= 2 ? es.eigenvalues()[1] - es.eigenvalues()[0] : 0.0;
    chain.mu = 1.0 - chain.lambda0;
    if (!(chain.mu > 0.0)) {
        throw ValidationError("perron_chain: Perron eigenvalue mu = 1 - lambda0 must be positive");
    }
    chain.alpha = perron_vector(M, chain.lambda0, chain.delta_M);
    if ((chain.alpha.array() <= 0.0).any() || !chain.alpha.allFinite()) {
        throw NumericalError("perron_chain: ground state of M is not entrywise positive");
    }
    chain.Z = chain.alpha.squaredNorm();
    chain.pi = chain.alpha.array().square() / chain.Z;

    chain.P.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            chain.P(i, j) = chain.alpha[j] * G(i, j) / (chain.mu * chain.alpha[i]);
        }
    }

    // Spectrum of P via its reversible similarity sqrt(pi_i / pi_j) P_ij.
    RealMatrix S(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            S(i, j) = std::sqrt(chain.pi[i] / chain.pi[j]) * chain.P(i, j);
        }
    }
    const RealMatrix Ssym = 0.5 * (S + S.transpose());
    Eigen::SelfAdjointEigenSolver<RealMatrix> pes(Ssym, Eigen::EigenvaluesOnly);
    if (pes.info() != Eigen::Success) {
        throw NumericalError("perron_chain: eigensolver failed on P");
    }
    chain.p_spectrum = pes.eigenvalues();
    std::sort(chain.p_spectrum.data(), chain.p_spectrum.data() + n, std::greater<>());
    chain.gap = n >= 2 ? 1.0 - chain.p_spectrum[1] : 1.0;
    return chain;
}

std::string to_string(CutMode mode) {
    return mode == CutMode::Exhaustive ? "exhaustive" : "prefix_suffix";
}

CutMode cut_mode_from_string(const std::string &text) {
    if (text == "exhaustive") return CutMode::Exhaustive;
    if (text == "prefix" || text == "prefix_suffix") return CutMode::PrefixSuffix;
    throw ValidationError("unknown cut mode '" + text + "' (expected exhaustive or prefix)");
}

ConductanceReport conductance(const MarkovChain &chain, CutMode mode) {
    const int n = static_cast<int>(chain.P.rows());
    if (n < 2) {
        throw ValidationError("conductance: chain needs at least two states");
    }
    if (mode == CutMode::Exhaustive && n > kExhaustiveCap) {
        throw ValidationError("conductance: exhaustive mode limited to " + std::to_string(kExhaustiveCap) +
                              " states (got " + std::to_string(n) + "); use prefix mode");
    }
    constexpr double kHalfSlack = 1e-12;
    ConductanceReport best;
    best.mode = mode;
    best.phi = std::numeric_limits<double>::infinity();

    auto consider = [&](const std::vector<char> &in) {
        double weight = 0.0;
        double flow = 0.0;
        for (int i = 0; i < n; ++i) {
            if (!in[i]) continue;
            weight += chain.pi[i];
            for (int j = 0; j < n; ++j) {
                if (!in[j]) flow += chain.pi[i] * chain.P(i, j);
            }
        }
        if (weight <= 0.0 || weight > 0.5 + kHalfSlack) return;
        const double ratio = flow / weight;
        if (!std::isfinite(best.phi) || ratio < best.phi - 1e-12 * std::max(1.0, best.phi)) {
            best.phi = ratio;
            best.flow = flow;
            best.weight = weight;
            best.witness.clear();
            for (int i = 0; i < n; ++i)
                if (in[i]) best.witness.push_back(i);
        }
    };

    std::vector<char> in(static_cast<std::size_t>(n), 0);
    if (mode == CutMode::Exhaustive) {
        const std::uint64_t total = std::uint64_t{1} << n;
        for (std::uint64_t mask = 1; mask + 1 < total; ++mask) {
            for (int i = 0; i < n; ++i) in[i] = static_cast<char>((mask >> i) & 1);
            consider(in);
        }
    } else {
        for (int m = 1; m < n; ++m) {
            for (int i = 0; i < n; ++i) in[i] = i < m;
            consider(in);
            for (int i = 0; i < n; ++i) in[i] = i >= n - m;
            consider(in);
        }
    }
    if (!std::isfinite(best.phi)) {
        throw NumericalError("conductance: no admissible subset with pi(B) <= 1/2");
    }
    best.bound = 0.5 * best.phi * best.phi;
    return best;
}

}  // namespace adiaforge
