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

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "adiaforge/circuit.hpp"
#include "adiaforge/gap_profile.hpp"
#include "adiaforge/local_hamiltonian.hpp"
#include "adiaforge/sparse_vector.hpp"
#include "adiaforge/subspace.hpp"

namespace adiaforge {

enum class EvolutionMode { Auto, Full, Subspace };

std::string to_string(EvolutionMode mode);
EvolutionMode evolution_mode_from_string(const std::string &text);

struct EvolutionConfig {
    double T = 10.0;
    long steps = 100;
    double delta = 0.1;
    double norm_tol = 1e-9;
    EvolutionMode mode = EvolutionMode::Auto;
    /// -1 integrates i d/dt psi = H psi; +1 the opposite sign.
    int sign = -1;
    double krylov_tol = 1e-10;
    /// Step exponentials by dense eigendecomposition up to this dimension.
    Eigen::Index dense_step_cap = 256;

    void validate() const;
};

struct EvolutionResult {
    double T = 0.0;
    long steps = 0;
    EvolutionMode mode = EvolutionMode::Full;
    Vector state;          // full-space amplitudes, or coefficients on `basis`
    SubspaceBasis basis;   // empty in full mode
    double fidelity = 0.0;  // |<psi(T)|ground(H_final)>|
    double norm_drift = 0.0;
    bool norm_ok = true;
    double max_norm = 0.0;  // max_s ||H(s)||
    bool max_norm_exact = true;
    double runtime_metric = 0.0;  // T * max_norm

    SparseVector full_state() const;
};

/// Piecewise-constant midpoint propagation from the analytic ground state of
/// h_init. Auto picks the S0 subspace when it is invariant under both
/// endpoints and the full space otherwise.
EvolutionResult evolve(const AdiabaticProgram &program, const EvolutionConfig &config);

/// exp(factor * H) v by Lanczos, with automatic substepping.
Vector krylov_expv(const std::function<Vector(const Vector &)> &H, const Vector &v, Complex factor, double tol,
                   int max_dim = 30);

/// ||H_final - H_init||^(1+delta) / (epsilon^delta gap^(2+delta)), unit constant.
double required_T_estimate(double norm_diff, double gap_min, double epsilon, double delta = 0.1);

struct MeasurementOutcome {
    std::vector<double> clock_histogram;  // l = 0..L
    double illegal = 0.0;
    double p_success = 0.0;                 // P(l >= L_original)
    std::vector<Vector> conditional_states;  // normalized computational state per l (zero if P(l) = 0)
    double trace_distance = 0.0;             // l >= L_original conditioned state vs alpha(L)
    double trace_distance_legal = 0.0;       // all legal outcomes vs alpha(L)
};

MeasurementOutcome measure_clock(const SparseVector &state, const AdiabaticProgram &program);
MeasurementOutcome measure_clock(const Vector &state, const AdiabaticProgram &program);

struct SearchConfig {
    double T0 = 10.0;
    int max_doublings = 14;
    double dt_max = 0.1;
    std::optional<double> target_fidelity = 0.95;
    std::optional<double> max_trace_distance;
    std::optional<double> min_p_success;
    EvolutionMode mode = EvolutionMode::Auto;
};

struct TrialRecord {
    double T = 0.0;
    long steps = 0;
    double fidelity = 0.0;
    double p_success = 0.0;
    double trace_distance = 0.0;
    bool accepted = false;
};

struct SearchResult {
    std::vector<TrialRecord> trials;
    bool found = false;
    EvolutionResult result;  // last trial (the accepted one when found)
    MeasurementOutcome measurement;
};

long steps_for(double T, double dt_max);

/// Doubles T from T0 until every configured target holds or the budget
/// 2^max_doublings * T0 is exhausted.
SearchResult search_T(const AdiabaticProgram &program, const SearchConfig &config);

struct PipelineConfig {
    SearchConfig search;
    int gap_samples = 101;
    double delta = 0.1;
    /// Extra sweep over {T, 2T, 4T, 8T} after the search.
    int sweep_factors = 4;
    double monotone_slack = 0.01;
    std::optional<double> J;
};

struct PipelineReport {
    Flavor flavor = Flavor::FiveLocal;
    double epsilon = 1.0;
    int L_original = 0;
    int L_padded = 0;
    BasisIndex dimension = 0;
    GapProfile profile;
    double norm_diff = 0.0;
    double T_estimate = 0.0;
    SearchResult search;
    std::vector<TrialRecord> sweep;
    bool sweep_monotone = true;
    double step_doubling_change = 0.0;  // |fidelity(N) - fidelity(2N)| at the found T
};

struct CompileOptions {
    Flavor flavor = Flavor::FiveLocal;
    /// Used by the 3-local and grid penalties.
    double epsilon = 1.0;
    /// Pads with identities (or identity rounds on the grid) for this epsilon.
    std::optional<double> pad_epsilon;
    std::optional<double> J;
    int l_exponent = 6;
};

/// Circuit -> program for any flavor. L_original is the unpadded length.
AdiabaticProgram compile_program(const Circuit &circuit, const CompileOptions &options);

/// pad -> build -> gap profile -> T estimate -> T search -> measurement.
PipelineReport run_pipeline(const Circuit &circuit, Flavor flavor, double epsilon, const PipelineConfig &config = {});

}  // namespace adiaforge
