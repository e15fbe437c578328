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

#include "adiaforge/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "adiaforge/eigen.hpp"
#include "adiaforge/local_hamiltonian.hpp"

namespace adiaforge {

bool check_monotone(const Vector &v, double tol) {
    Vector w = v;
    fix_phase(w);
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        if (std::abs(w[i].imag()) > tol) return false;
        if (w[i].real() < -tol) return false;
        if (i > 0 && w[i].real() > w[i - 1].real() + tol) return false;
    }
    return true;
}

bool check_monotone(const RealVector &v, double tol) {
    return check_monotone(Vector(v.cast<Complex>()), tol);
}

GerschgorinReport gerschgorin(const Matrix &H) {
    if (H.rows() != H.cols() || H.rows() == 0) {
        throw ValidationError("gerschgorin: matrix must be square and nonempty");
    }
    const int n = static_cast<int>(H.rows());
    GerschgorinReport rep;
    for (int i = 0; i < n; ++i) {
        double radius = 0.0;
        for (int j = 0; j < n; ++j)
            if (j != i) radius += std::abs(H(i, j));
        rep.discs.push_back(Disc{H(i, i).real(), radius});
    }

    // Overlapping intervals merge; sorting by left end makes union-find a sweep.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return rep.discs[a].center - rep.discs[a].radius < rep.discs[b].center - rep.discs[b].radius;
    });
    double scale = 1.0;
    for (const auto &d : rep.discs) scale = std::max(scale, std::abs(d.center) + d.radius);
    const double tol = 1e-12 * scale;
    for (int idx : order) {
        const double lo = rep.discs[idx].center - rep.discs[idx].radius;
        const double hi = rep.discs[idx].center + rep.discs[idx].radius;
        if (!rep.components.empty() && lo <= rep.components.back().hi + tol) {
            auto &c = rep.components.back();
            c.hi = std::max(c.hi, hi);
            c.discs.push_back(idx);
        } else {
            rep.components.push_back(DiscComponent{lo, hi, {idx}, 0});
        }
    }
    for (auto &c : rep.components) std::sort(c.discs.begin(), c.discs.end());

    Eigen::SelfAdjointEigenSolver<Matrix> es(H, Eigen::EigenvaluesOnly);
    rep.eigenvalues = es.eigenvalues();
    for (Eigen::Index k = 0; k < rep.eigenvalues.size(); ++k) {
        const double lam = rep.eigenvalues[k];
        bool inside = false;
        for (auto &c : rep.components) {
            if (lam >= c.lo - tol && lam <= c.hi + tol) {
                ++c.eigenvalue_count;
                inside = true;
                break;
            }
        }
        if (!inside) rep.all_contained = false;
    }
    for (const auto &c : rep.components) {
        if (c.eigenvalue_count != static_cast<int>(c.discs.size())) rep.counts_match = false;
    }
    return rep;
}

LeakReport leak_certify(const Matrix &H1, const Matrix &H2, const Matrix &S, double J, double slack) {
    const Eigen::Index dim = H1.rows();
    if (H1.cols() != dim || H2.rows() != dim || H2.cols() != dim || S.rows() != dim) {
        throw ValidationError("leak_certify: dimension mismatch");
    }
    if (S.cols() < 2) {
        throw ValidationError("leak_certify: S must have dimension >= 2");
    }
    if ((S.adjoint() * S - Matrix::Identity(S.cols(), S.cols())).cwiseAbs().maxCoeff() > 1e-10) {
        throw ValidationError("leak_certify: S columns are not orthonormal");
    }
    if ((H2 * S).norm() > 1e-9 * std::max(1.0, J)) {
        throw ValidationError("leak_certify: H2 does not vanish on S");
    }
    LeakReport rep;
    rep.J = J;
    rep.K = hermitian_norm(H1);
    rep.hypothesis = J > 2.0 * rep.K;
    if (!rep.hypothesis) {
        std::ostringstream os;
        os << "leak_certify: hypothesis J > 2K violated (J = " << J << ", K = " << rep.K << ")";
        throw ValidationError(os.str());
    }
    if (S.cols() < dim) {
        // H2 must be >= J on the orthogonal complement of S.
        Eigen::JacobiSVD<Matrix> svd(S, Eigen::ComputeFullU);
        const Matrix comp = svd.matrixU().rightCols(dim - S.cols());
        Eigen::SelfAdjointEigenSolver<Matrix> es(comp.adjoint() * H2 * comp, Eigen::EigenvaluesOnly);
        if (es.eigenvalues()[0] < J * (1.0 - 1e-12)) {
            throw ValidationError("leak_certify: H2 is below J on the complement of S");
        }
    }
    rep.shift = rep.K * rep.K / (J - 2.0 * rep.K);

    const Spectrum restricted = eigen_low(Matrix(S.adjoint() * H1 * S), 2);
    rep.a = restricted.eigenvalues[0];
    rep.b = restricted.eigenvalues[1];
    const Vector xi = S * restricted.eigenvectors.col(0);

    const Spectrum full = eigen_low(Matrix(H1 + H2), 2);
    rep.a_full = full.eigenvalues[0];
    rep.b_full = full.eigenvalues[1];
    rep.overlap = std::norm(xi.dot(full.eigenvectors.col(0)));
    rep.overlap_bound = rep.b > rep.a ? 1.0 - rep.shift / (rep.b - rep.a) : -std::numeric_limits<double>::infinity();

    rep.lower_ok = rep.a - rep.shift <= rep.a_full + slack;
    rep.upper_ok = rep.a_full <= rep.a + slack;
    rep.second_ok = rep.b_full >= rep.b - rep.shift - slack;
    rep.overlap_ok = rep.overlap >= rep.overlap_bound - slack;
    return rep;
}

LeakReport leak_certify(const Matrix &H1, const Matrix &S, double J, double slack) {
    const Eigen::Index dim = H1.rows();
    const Matrix H2 = J * (Matrix::Identity(dim, dim) - S * S.adjoint());
    return leak_certify(H1, H2, S, J, slack);
}

namespace {

struct GroundSpace {
    double energy = 0.0;
    double splitting = std::numeric_limits<double>::infinity();
    Matrix basis;
};

GroundSpace ground_space(const Matrix &H) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(H);
    if (es.info() != Eigen::Success) {
        throw NumericalError("angle_certify: eigensolver failed");
    }
    const RealVector &ev = es.eigenvalues();
    GroundSpace g;
    g.energy = ev[0];
    Eigen::Index d = 1;
    while (d < ev.size() && ev[d] - ev[0] < kDegeneracyTol) ++d;
    if (d < ev.size()) g.splitting = ev[d] - ev[0];
    g.basis = es.eigenvectors().leftCols(d);
    return g;
}

}  // namespace

AngleReport angle_certify(const Matrix &H1, const Matrix &H2, std::optional<double> Lambda) {
    if (H1.rows() != H1.cols() || H2.rows() != H1.rows() || H2.cols() != H1.cols()) {
        throw ValidationError("angle_certify: dimension mismatch");
    }
    const GroundSpace g1 = ground_space(H1);
    const GroundSpace g2 = ground_space(H2);
    AngleReport rep;
    rep.a1 = g1.energy;
    rep.a2 = g2.energy;
    rep.gap1 = g1.splitting;
    rep.gap2 = g2.splitting;
    rep.dim1 = static_cast<int>(g1.basis.cols());
    rep.dim2 = static_cast<int>(g2.basis.cols());
    const double floor = std::min(rep.gap1, rep.gap2);
    if (Lambda) {
        if (!(*Lambda > 0.0) || *Lambda > floor * (1.0 + 1e-12)) {
            std::ostringstream os;
            os << "angle_certify: Lambda = " << *Lambda << " must be positive and at most both splittings ("
               << rep.gap1 << ", " << rep.gap2 << ")";
            throw ValidationError(os.str());
        }
        rep.Lambda = *Lambda;
    } else {
        if (!std::isfinite(floor)) {
            throw ValidationError("angle_certify: both inputs are fully degenerate; supply Lambda");
        }
        rep.Lambda = floor;
    }
    Eigen::JacobiSVD<Matrix> svd(g1.basis.adjoint() * g2.basis);
    const double cos_theta = std::min(1.0, svd.singularValues()[0]);
    rep.theta = std::acos(cos_theta);
    const double half = std::sin(rep.theta / 2.0);
    rep.bound = rep.a1 + rep.a2 + 2.0 * rep.Lambda * half * half;
    Eigen::SelfAdjointEigenSolver<Matrix> es(H1 + H2, Eigen::EigenvaluesOnly);
    rep.actual = es.eigenvalues()[0];
    rep.holds = rep.actual >= rep.bound - 1e-12 * std::max(1.0, std::abs(rep.bound));
    return rep;
}

}  // namespace adiaforge
