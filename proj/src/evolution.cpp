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

#include "adiaforge/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "adiaforge/eigen.hpp"
#include "adiaforge/grid6.hpp"
#include "adiaforge/kitaev3.hpp"
#include "adiaforge/kitaev5.hpp"

namespace adiaforge {

std::string to_string(EvolutionMode mode) {
    switch (mode) {
    case EvolutionMode::Auto:
        return "auto";
    case EvolutionMode::Full:
        return "full";
    case EvolutionMode::Subspace:
        return "subspace";
    }
    return "unknown";
}

EvolutionMode evolution_mode_from_string(const std::string &text) {
    if (text == "auto") return EvolutionMode::Auto;
    if (text == "full") return EvolutionMode::Full;
    if (text == "subspace") return EvolutionMode::Subspace;
    throw ValidationError("unknown evolution mode '" + text + "' (expected auto, full or subspace)");
}

void EvolutionConfig::validate() const {
    if (!(T > 0.0) || !std::isfinite(T)) throw ValidationError("evolution: T must be positive and finite");
    if (steps < 1) throw ValidationError("evolution: steps must be >= 1");
    if (!(delta > 0.0)) throw ValidationError("evolution: delta must be positive");
    if (sign != -1 && sign != 1) throw ValidationError("evolution: sign must be -1 or +1");
    if (!(krylov_tol > 0.0)) throw ValidationError("evolution: krylov tolerance must be positive");
}

SparseVector EvolutionResult::full_state() const {
    if (mode == EvolutionMode::Subspace) return basis.lift(state);
    return SparseVector::from_dense(state);
}

Vector krylov_expv(const std::function<Vector(const Vector &)> &H, const Vector &v, Complex factor, double tol,
                   int max_dim) {
    const double beta0_in = v.norm();
    if (beta0_in == 0.0) return v;
    const Eigen::Index n = v.size();
    max_dim = static_cast<int>(std::min<Eigen::Index>(max_dim, n));

    Vector w = v;
    double remaining = 1.0;
    double tau = 1.0;
    int guard = 0;
    while (remaining > 0.0) {
        if (++guard > 100000) throw NumericalError("krylov_expv: step size collapsed");
        const double beta0 = w.norm();
        Matrix V(n, max_dim + 1);
        RealVector alpha = RealVector::Zero(max_dim);
        RealVector beta = RealVector::Zero(max_dim);
        V.col(0) = w / beta0;
        int m = 0;
        bool happy = false;
        for (int j = 0; j < max_dim; ++j) {
            Vector u = H(V.col(j));
            alpha[j] = V.col(j).dot(u).real();
            // Full reorthogonalization, twice.
            for (int pass = 0; pass < 2; ++pass) u -= V.leftCols(j + 1) * (V.leftCols(j + 1).adjoint() * u);
            beta[j] = u.norm();
            m = j + 1;
            if (beta[j] < 1e-13 * std::max(1.0, std::abs(alpha[j]))) {
                happy = true;
                break;
            }
            V.col(j + 1) = u / beta[j];
        }
        RealMatrix T = RealMatrix::Zero(m, m);
        for (int j = 0; j < m; ++j) {
            T(j, j) = alpha[j];
            if (j + 1 < m) T(j, j + 1) = T(j + 1, j) = beta[j];
        }
        Eigen::SelfAdjointEigenSolver<RealMatrix> es(T);
        tau = std::min(tau, remaining);
        while (true) {
            const Vector phases = (factor * tau * es.eigenvalues().cast<Complex>()).array().exp();
            const Vector y = es.eigenvectors().cast<Complex>() *
                             (phases.asDiagonal() * es.eigenvectors().row(0).transpose().cast<Complex>());
            const double err = happy ? 0.0 : beta0 * beta[m - 1] * std::abs(y[m - 1]);
            if (err <= tol || tau < 1e-12) {
                if (tau < 1e-12 && err > tol) throw NumericalError("krylov_expv: tolerance not reachable");
                w = beta0 * (V.leftCols(m) * y);
                remaining -= tau;
                if (err < 0.1 * tol) tau *= 2.0;
                break;
            }
            tau *= 0.5;
        }
    }
    return w;
}

namespace {

// Hermitian step exponential exp(factor * H) applied by eigendecomposition.
Vector dense_step(const Matrix &H, const Vector &psi, Complex factor) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(H);
    if (es.info() != Eigen::Success) throw NumericalError("evolve: step eigensolver failed");
    const Vector coeff = es.eigenvectors().adjoint() * psi;
    const Vector phases = (factor * es.eigenvalues().cast<Complex>()).array().exp();
    return es.eigenvectors() * phases.cwiseProduct(coeff);
}

struct NormInfo {
    double value = 0.0;
    bool exact = true;
};

NormInfo endpoint_norm(const AdiabaticProgram &program) {
    // ||H(s)|| is convex in s, so the maximum sits at an endpoint.
    const BasisIndex dim = program.h_init.dimension();
    if (dim <= 512) {
        const double a = hermitian_norm(Matrix(assemble(program.h_init)));
        const double b = hermitian_norm(Matrix(assemble(program.h_final)));
        return {std::max(a, b), true};
    }
    return {std::max(norm_bound(program.h_init), norm_bound(program.h_final)), false};
}

}  // namespace

EvolutionResult evolve(const AdiabaticProgram &program, const EvolutionConfig &config) {
    config.validate();
    program.validate();
    EvolutionResult result;
    result.T = config.T;
    result.steps = config.steps;
    const double dt = config.T / static_cast<double>(config.steps);
    const Complex factor(0.0, config.sign * dt);

    EvolutionMode mode = config.mode;
    SubspaceBasis basis;
    Matrix A_sub, B_sub;
    if (mode != EvolutionMode::Full) {
        basis = subspace_basis(program, SubspaceMode::S0);
        const double r0 = invariance_residual(program.h_init, basis);
        const double r1 = invariance_residual(program.h_final, basis);
        const bool invariant = r0 <= 1e-10 && r1 <= 1e-10;
        if (mode == EvolutionMode::Subspace && !invariant) {
            std::ostringstream os;
            os << "evolve: S0 is not invariant (residuals " << r0 << ", " << r1 << "); use full mode";
            throw ValidationError(os.str());
        }
        mode = invariant ? EvolutionMode::Subspace : EvolutionMode::Full;
        if (invariant) {
            A_sub = restrict(program.h_init, basis).matrix;
            B_sub = restrict(program.h_final, basis).matrix;
        }
    }
    result.mode = mode;

    Vector psi;
    Vector ground;
    if (mode == EvolutionMode::Subspace) {
        psi = Vector::Zero(basis.size());
        psi[0] = 1.0;  // gamma_0 is the first basis vector
        for (long k = 0; k < config.steps; ++k) {
            const double s = (static_cast<double>(k) + 0.5) / static_cast<double>(config.steps);
            psi = dense_step((1.0 - s) * A_sub + s * B_sub, psi, factor);
        }
        ground = eigen_low(B_sub, 1).eigenvectors.col(0);
        result.basis = std::move(basis);
    } else {
        const SparseMatrix A = assemble(program.h_init);
        const SparseMatrix B = assemble(program.h_final);
        const Eigen::Index dim = A.rows();
        psi = initial_state(program).to_dense();
        if (dim <= config.dense_step_cap) {
            const Matrix Ad(A);
            const Matrix Bd(B);
            for (long k = 0; k < config.steps; ++k) {
                const double s = (static_cast<double>(k) + 0.5) / static_cast<double>(config.steps);
                psi = dense_step((1.0 - s) * Ad + s * Bd, psi, factor);
            }
        } else {
            for (long k = 0; k < config.steps; ++k) {
                const double s = (static_cast<double>(k) + 0.5) / static_cast<double>(config.steps);
                const SparseMatrix H = (1.0 - s) * A + s * B;
                psi = krylov_expv([&H](const Vector &x) -> Vector { return H * x; }, psi, factor, config.krylov_tol);
            }
        }
        ground = eigen_low(B, 1).eigenvectors.col(0);
    }

    result.norm_drift = std::abs(psi.norm() - 1.0);
    result.norm_ok = result.norm_drift <= config.norm_tol;
    if (!result.norm_ok) {
        std::ostringstream os;
        os << "evolve: norm drift " << result.norm_drift << " exceeds " << config.norm_tol;
        throw NumericalError(os.str());
    }
    result.fidelity = std::abs(ground.dot(psi));
    result.state = std::move(psi);
    const NormInfo norm = endpoint_norm(program);
    result.max_norm = norm.value;
    result.max_norm_exact = norm.exact;
    result.runtime_metric = config.T * norm.value;
    return result;
}

double required_T_estimate(double norm_diff, double gap_min, double epsilon, double delta) {
    if (!(norm_diff >= 0.0)) throw ValidationError("required_T_estimate: norm must be nonnegative");
    if (!(gap_min > 0.0)) throw ValidationError("required_T_estimate: gap must be positive");
    if (!(epsilon > 0.0)) throw ValidationError("required_T_estimate: epsilon must be positive");
    if (!(delta > 0.0)) throw ValidationError("required_T_estimate: delta must be positive");
    return std::pow(norm_diff, 1.0 + delta) / (std::pow(epsilon, delta) * std::pow(gap_min, 2.0 + delta));
}

namespace {

template <typename Amplitude>
MeasurementOutcome measure_impl(const Amplitude &amplitude, double norm2, const AdiabaticProgram &program) {
    const int L = program.L;
    const int n = program.n;
    const BasisIndex comp = BasisIndex{1} << n;
    MeasurementOutcome out;
    out.clock_histogram.assign(static_cast<std::size_t>(L + 1), 0.0);
    out.conditional_states.assign(static_cast<std::size_t>(L + 1), Vector::Zero(static_cast<Eigen::Index>(comp)));

    const Vector target = simulate(program.circuit).states.back();
    const Matrix sigma = target * target.adjoint();
    Matrix rho_success = Matrix::Zero(static_cast<Eigen::Index>(comp), static_cast<Eigen::Index>(comp));
    Matrix rho_legal = rho_success;

    double legal = 0.0;
    for (int l = 0; l <= L; ++l) {
        Vector c(static_cast<Eigen::Index>(comp));
        for (BasisIndex x = 0; x < comp; ++x) c[static_cast<Eigen::Index>(x)] = amplitude(legal_index(program, l, x));
        const double p = c.squaredNorm();
        out.clock_histogram[static_cast<std::size_t>(l)] = p;
        legal += p;
        const Matrix block = c * c.adjoint();
        rho_legal += block;
        if (l >= program.L_original) {
            out.p_success += p;
            rho_success += block;
        }
        if (p > 0.0) out.conditional_states[static_cast<std::size_t>(l)] = c / std::sqrt(p);
    }
    out.illegal = std::max(0.0, norm2 - legal);

    auto distance = [&](const Matrix &rho, double weight) {
        if (weight <= 0.0) return 1.0;
        Eigen::SelfAdjointEigenSolver<Matrix> es(rho / weight - sigma, Eigen::EigenvaluesOnly);
        return 0.5 * es.eigenvalues().cwiseAbs().sum();
    };
    out.trace_distance = distance(rho_success, out.p_success);
    out.trace_distance_legal = distance(rho_legal, legal);
    return out;
}

}  // namespace

MeasurementOutcome measure_clock(const SparseVector &state, const AdiabaticProgram &program) {
    if (state.dimension() != program.h_init.dimension()) {
        throw ValidationError("measure_clock: state dimension does not match the program");
    }
    const auto &entries = state.entries();
    auto amplitude = [&entries](BasisIndex idx) -> Complex {
        auto it = std::lower_bound(entries.begin(), entries.end(), idx,
                                   [](const SparseVector::Entry &e, BasisIndex i) { return e.first < i; });
        return (it != entries.end() && it->first == idx) ? it->second : Complex(0.0);
    };
    const double norm = state.norm();
    return measure_impl(amplitude, norm * norm, program);
}

MeasurementOutcome measure_clock(const Vector &state, const AdiabaticProgram &program) {
    if (static_cast<BasisIndex>(state.size()) != program.h_init.dimension()) {
        throw ValidationError("measure_clock: state dimension does not match the program");
    }
    auto amplitude = [&state](BasisIndex idx) { return state[static_cast<Eigen::Index>(idx)]; };
    return measure_impl(amplitude, state.squaredNorm(), program);
}

long steps_for(double T, double dt_max) {
    if (!(dt_max > 0.0)) throw ValidationError("dt_max must be positive");
    return std::max(1L, static_cast<long>(std::ceil(T / dt_max - 1e-9)));
}

namespace {

TrialRecord run_trial(const AdiabaticProgram &program, double T, long steps, EvolutionMode mode,
                      EvolutionResult *result_out, MeasurementOutcome *measurement_out) {
    EvolutionConfig cfg;
    cfg.T = T;
    cfg.steps = steps;
    cfg.mode = mode;
    EvolutionResult r = evolve(program, cfg);
    MeasurementOutcome m = measure_clock(r.full_state(), program);
    TrialRecord rec{T, steps, r.fidelity, m.p_success, m.trace_distance, false};
    if (result_out) *result_out = std::move(r);
    if (measurement_out) *measurement_out = std::move(m);
    return rec;
}

}  // namespace

SearchResult search_T(const AdiabaticProgram &program, const SearchConfig &config) {
    if (!(config.T0 > 0.0)) throw ValidationError("search: T0 must be positive");
    if (config.max_doublings < 0) throw ValidationError("search: max_doublings must be >= 0");
    SearchResult out;
    double T = config.T0;
    for (int d = 0; d <= config.max_doublings; ++d, T *= 2.0) {
        EvolutionResult r;
        MeasurementOutcome m;
        TrialRecord rec = run_trial(program, T, steps_for(T, config.dt_max), config.mode, &r, &m);
        rec.accepted = (!config.target_fidelity || rec.fidelity >= *config.target_fidelity) &&
                       (!config.max_trace_distance || rec.trace_distance <= *config.max_trace_distance) &&
                       (!config.min_p_success || rec.p_success >= *config.min_p_success);
        out.trials.push_back(rec);
        out.result = std::move(r);
        out.measurement = std::move(m);
        if (rec.accepted) {
            out.found = true;
            break;
        }
    }
    return out;
}

AdiabaticProgram compile_program(const Circuit &circuit, const CompileOptions &options) {
    circuit.validate();
    const double pad_eps = options.pad_epsilon.value_or(1.0);
    AdiabaticProgram program;
    if (options.flavor == Flavor::Grid) {
        const GridLayoutCircuit layout = to_grid_layout(circuit);
        int rounds = 0;
        if (options.pad_epsilon) {
            const int extra = padding_count(layout.length(), pad_eps);
            rounds = (extra + 2 * layout.n - 1) / (2 * layout.n);
        }
        GridOptions opts;
        opts.epsilon = options.epsilon;
        opts.J = options.J;
        opts.l_exponent = options.l_exponent;
        program = build_grid_program(pad_identity_rounds(layout, rounds), opts);
        program.L_original = layout.length();
    } else {
        const Circuit base = ensure_min_length(circuit);
        const Circuit padded = options.pad_epsilon ? pad_identities(base, pad_eps) : base;
        if (options.flavor == Flavor::FiveLocal) {
            program = build_5local(padded);
            if (options.pad_epsilon) program.epsilon = pad_eps;
        } else {
            Kitaev3Options opts;
            opts.epsilon = options.epsilon;
            opts.J = options.J;
            opts.l_exponent = options.l_exponent;
            program = build_3local(padded, opts);
        }
        program.L_original = base.length();
    }
    return program;
}

PipelineReport run_pipeline(const Circuit &circuit, Flavor flavor, double epsilon, const PipelineConfig &config) {
    circuit.validate();
    PipelineReport rep;
    rep.flavor = flavor;
    rep.epsilon = epsilon;

    CompileOptions copts;
    copts.flavor = flavor;
    copts.epsilon = epsilon;
    copts.pad_epsilon = epsilon;
    copts.J = config.J;
    const AdiabaticProgram program = compile_program(circuit, copts);
    const SubspaceMode profile_mode = flavor == Flavor::Grid ? SubspaceMode::S : SubspaceMode::S0;
    rep.L_original = program.L_original;
    rep.L_padded = program.L;
    rep.dimension = program.h_init.dimension();

    rep.profile = gap_profile(program, profile_mode, uniform_samples(config.gap_samples));
    {
        const SubspaceBasis basis = subspace_basis(program, profile_mode);
        const Matrix diff = restrict(program.h_final, basis).matrix - restrict(program.h_init, basis).matrix;
        rep.norm_diff = hermitian_norm(diff);
    }
    rep.T_estimate = rep.profile.min_gap > 0.0
                         ? required_T_estimate(rep.norm_diff, rep.profile.min_gap, epsilon, config.delta)
                         : std::numeric_limits<double>::infinity();

    rep.search = search_T(program, config.search);
    const TrialRecord &last = rep.search.trials.back();
    const double T_star = last.T;

    rep.sweep.push_back(last);
    double T = T_star;
    for (int f = 1; f < config.sweep_factors; ++f) {
        T *= 2.0;
        rep.sweep.push_back(run_trial(program, T, steps_for(T, config.search.dt_max), config.search.mode, nullptr,
                                      nullptr));
    }
    double best = rep.sweep.front().fidelity;
    for (const auto &t : rep.sweep) {
        if (t.fidelity < best - config.monotone_slack) rep.sweep_monotone = false;
        best = std::max(best, t.fidelity);
    }

    const TrialRecord fine = run_trial(program, T_star, 2 * last.steps, config.search.mode, nullptr, nullptr);
    rep.step_doubling_change = std::abs(fine.fidelity - last.fidelity);
    return rep;
}

}  // namespace adiaforge
