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

#include "adiaforge/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace adiaforge {

void fix_phase(Vector &v) {
    if (v.size() == 0) return;
    const double top = v.cwiseAbs().maxCoeff();
    if (top == 0.0) return;
    Eigen::Index pick = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) >= top * (1.0 - 1e-9)) {
            pick = i;
            break;
        }
    }
    v *= std::conj(v[pick]) / std::abs(v[pick]);
    v[pick] = std::abs(v[pick]);
}

namespace {

void finish(Spectrum &sp) {
    sp.ground = sp.eigenvalues.size() > 0 ? sp.eigenvalues[0] : 0.0;
    if (sp.eigenvalues.size() >= 2) {
        const double d = sp.eigenvalues[1] - sp.eigenvalues[0];
        sp.degenerate = d < kDegeneracyTol;
        sp.gap = sp.degenerate ? 0.0 : d;
    }
}

void check_residuals(const Spectrum &sp, double scale, const char *who) {
    for (Eigen::Index i = 0; i < sp.residuals.size(); ++i) {
        if (!(sp.residuals[i] <= kResidualTol * scale)) {
            std::ostringstream os;
            os << who << ": eigenpair " << i << " residual " << sp.residuals[i] << " exceeds " << kResidualTol * scale;
            throw NumericalError(os.str());
        }
    }
}

}  // namespace

Spectrum eigen_low(const Matrix &H, int k, bool vectors) {
    if (H.rows() != H.cols()) {
        throw ValidationError("eigen_low: matrix is not square");
    }
    if (k < 1 || k > H.rows()) {
        throw ValidationError("eigen_low: k must lie in [1, dim]");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(H, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw NumericalError("eigen_low: dense eigensolver did not converge");
    }
    Spectrum sp;
    sp.eigenvalues = es.eigenvalues().head(k);
    if (vectors) {
        sp.eigenvectors = es.eigenvectors().leftCols(k);
        sp.residuals.resize(k);
        for (int i = 0; i < k; ++i) {
            Vector v = sp.eigenvectors.col(i);
            fix_phase(v);
            sp.eigenvectors.col(i) = v;
            sp.residuals[i] = (H * v - sp.eigenvalues[i] * v).norm();
        }
        const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
        check_residuals(sp, scale, "eigen_low");
    }
    finish(sp);
    return sp;
}

Spectrum eigen_low(const SparseMatrix &H, int k, bool vectors) {
    if (H.rows() <= kDenseSolverCap) {
        return eigen_low(Matrix(H), k, vectors);
    }
    Spectrum sp = lanczos_low([&H](const Vector &v) -> Vector { return H * v; }, H.rows(), k);
    if (!vectors) {
        sp.eigenvectors.resize(0, 0);
        sp.residuals.resize(0);
    }
    return sp;
}

Spectrum lanczos_low(const LinearOperator &H, Eigen::Index dim, int k, const LanczosOptions &options) {
    if (k < 1 || k > dim) {
        throw ValidationError("lanczos_low: k must lie in [1, dim]");
    }
    const Eigen::Index max_basis = std::min<Eigen::Index>(dim, std::max(options.max_basis, 2 * k + 10));
    const long budget = options.max_applications > 0 ? options.max_applications : 10L * static_cast<long>(dim);

    std::mt19937_64 rng(options.seed);
    std::normal_distribution<double> normal;
    auto random_vector = [&] {
        Vector v(dim);
        for (Eigen::Index i = 0; i < dim; ++i) v[i] = Complex(normal(rng), normal(rng));
        return v;
    };

    Matrix V(dim, 0);
    Matrix W(dim, 0);
    Vector next = random_vector();
    long applications = 0;
    double scale = 1.0;
    Spectrum sp;

    while (true) {
        // Two passes of classical Gram-Schmidt.
        for (int pass = 0; pass < 2 && V.cols() > 0; ++pass) next -= V * (V.adjoint() * next);
        double nrm = next.norm();
        const bool exhausted = nrm < 1e-10 * std::max(1.0, scale);
        if (!exhausted) {
            V.conservativeResize(Eigen::NoChange, V.cols() + 1);
            W.conservativeResize(Eigen::NoChange, W.cols() + 1);
            V.col(V.cols() - 1) = next / nrm;
            W.col(W.cols() - 1) = H(V.col(V.cols() - 1));
            ++applications;
        }
        const Eigen::Index m = V.cols();
        const bool evaluate = exhausted || m == max_basis || m == dim || (m >= k && m % 20 == 0);
        if (!evaluate) {
            next = W.col(m - 1);
            continue;
        }
        if (m < k) {
            next = random_vector();
            continue;
        }

        Matrix T = V.adjoint() * W;
        T = (0.5 * (T + T.adjoint())).eval();
        Eigen::SelfAdjointEigenSolver<Matrix> es(T);
        scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
        const Matrix X = V * es.eigenvectors().leftCols(k);
        const Matrix HX = W * es.eigenvectors().leftCols(k);
        RealVector res(k);
        int first_bad = -1;
        for (int i = 0; i < k; ++i) {
            res[i] = (HX.col(i) - es.eigenvalues()[i] * X.col(i)).norm();
            if (first_bad < 0 && res[i] > options.tol * scale) first_bad = i;
        }
        if (first_bad < 0 || m == dim) {
            sp.eigenvalues = es.eigenvalues().head(k);
            sp.eigenvectors = X;
            sp.residuals = res;
            for (int i = 0; i < k; ++i) {
                Vector v = sp.eigenvectors.col(i);
                fix_phase(v);
                sp.eigenvectors.col(i) = v;
            }
            sp.iterations = static_cast<int>(applications);
            finish(sp);
            check_residuals(sp, scale, "lanczos_low");
            return sp;
        }
        if (applications >= budget) {
            std::ostringstream os;
            os << "lanczos_low: no convergence after " << applications << " applications; residuals";
            for (int i = 0; i < k; ++i) os << ' ' << res[i];
            throw NumericalError(os.str());
        }
        if (m == max_basis) {
            // Thick restart: keep the lowest Ritz vectors.
            const Eigen::Index keep = std::min<Eigen::Index>(m - 1, std::max<Eigen::Index>(k + 5, max_basis / 2));
            const Matrix Y = es.eigenvectors().leftCols(keep);
            V = (V * Y).eval();
            W = (W * Y).eval();
        }
        next = HX.col(first_bad) - es.eigenvalues()[first_bad] * X.col(first_bad);
    }
}

RealMatrix s0_closed_form(double s, int L) {
    if (!(s >= 0.0 && s <= 1.0)) {
        throw ValidationError("s0_closed_form: s must lie in [0, 1]");
    }
    if (L < 1) {
        throw ValidationError("s0_closed_form: L must be >= 1");
    }
    RealMatrix init = RealMatrix::Identity(L + 1, L + 1);
    init(0, 0) = 0.0;
    RealMatrix fin = RealMatrix::Zero(L + 1, L + 1);
    for (int i = 0; i <= L; ++i) {
        fin(i, i) = (i == 0 || i == L) ? 0.5 : 1.0;
        if (i < L) {
            fin(i, i + 1) = -0.5;
            fin(i + 1, i) = -0.5;
        }
    }
    return (1.0 - s) * init + s * fin;
}

}  // namespace adiaforge
