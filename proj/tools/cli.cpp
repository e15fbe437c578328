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

#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "adiaforge/circuit.hpp"
#include "adiaforge/eigen.hpp"
#include "adiaforge/evolution.hpp"
#include "adiaforge/gap_profile.hpp"
#include "adiaforge/grid6.hpp"
#include "adiaforge/json_io.hpp"
#include "adiaforge/kitaev3.hpp"
#include "adiaforge/kitaev5.hpp"
#include "adiaforge/lemmas.hpp"
#include "adiaforge/markov.hpp"
#include "adiaforge/random.hpp"
#include "adiaforge/subspace.hpp"

namespace adiaforge::cli {

namespace {

constexpr double kLargeJ = 1e8;

struct CompileArgs {
    std::string circuit;
    std::string flavor = "5local";
    double epsilon = 1.0;
    std::optional<double> pad_epsilon;
    std::optional<double> J;
    int l_exponent = 6;
    std::string out;
};

struct GapArgs {
    std::string prog;
    std::string mode = "S0";
    int samples = 101;
    std::string out;
};

struct EvolveArgs {
    std::string prog;
    double T = 10.0;
    std::optional<long> steps;
    double dt_max = 0.1;
    std::string mode = "auto";
    bool search = false;
    std::optional<double> target_fidelity;
    std::optional<double> max_trace_distance;
    std::optional<double> min_success;
    int max_doublings = 14;
    std::string out;
};

struct ShapesArgs {
    int n = 1;
    int R = 1;
    bool json = false;
    std::string out;
};

struct VerifyArgs {
    std::string circuit;
    std::uint64_t seed = 0;
    int instances = 10;
    std::string out;
};

struct MarkovArgs {
    std::string prog;
    double s = 1.0;
    std::string mode = "S0";
    std::string cut = "exhaustive";
    std::string out;
};

void emit(const std::string &path, const std::string &content, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << content;
    } else {
        write_file_atomic(path, content);
    }
}

std::string dump(const Json &j) {
    return j.dump(2) + "\n";
}

void require_finite(double v, const char *name) {
    if (!std::isfinite(v)) throw ValidationError(std::string(name) + " must be finite");
}

int cmd_compile(const CompileArgs &a, std::ostream &out, std::ostream &err) {
    CompileOptions opts;
    opts.flavor = flavor_from_string(a.flavor);
    opts.epsilon = a.epsilon;
    opts.pad_epsilon = a.pad_epsilon;
    opts.J = a.J;
    opts.l_exponent = a.l_exponent;
    if (a.l_exponent != 5 && a.l_exponent != 6) throw ValidationError("--L-exponent must be 5 or 6");
    require_finite(a.epsilon, "--epsilon");
    if (a.epsilon <= 0.0 || a.epsilon > 1.0) throw ValidationError("--epsilon must lie in (0, 1]");
    if (a.pad_epsilon && (!(*a.pad_epsilon > 0.0) || *a.pad_epsilon > 1.0)) {
        throw ValidationError("--pad-epsilon must lie in (0, 1]");
    }
    if (a.J && !(*a.J > 0.0 && std::isfinite(*a.J))) throw ValidationError("--J must be positive and finite");
    const Circuit circuit = circuit_from_json(read_json_file(a.circuit));
    const AdiabaticProgram program = compile_program(circuit, opts);
    if (program.J && *program.J > kLargeJ) {
        err << "warning: J = " << *program.J << " exceeds 1e8; double-precision conditioning degrades\n";
    }
    emit(a.out, dump(program_to_json(program)), out);
    return kExitOk;
}

int cmd_gap(const GapArgs &a, std::ostream &out) {
    if (a.samples < 2) throw ValidationError("--samples must be at least 2");
    const SubspaceMode mode = subspace_mode_from_string(a.mode);
    const AdiabaticProgram program = program_from_json(read_json_file(a.prog));
    const GapProfile profile = gap_profile(program, mode, uniform_samples(a.samples));
    emit(a.out, to_csv(profile), out);
    return kExitOk;
}

int cmd_evolve(const EvolveArgs &a, std::ostream &out) {
    require_finite(a.T, "--T");
    if (!(a.T > 0.0)) throw ValidationError("--T must be positive");
    if (!(a.dt_max > 0.0)) throw ValidationError("--dt-max must be positive");
    const EvolutionMode mode = evolution_mode_from_string(a.mode);
    const AdiabaticProgram program = program_from_json(read_json_file(a.prog));
    const bool search = a.search || a.target_fidelity || a.max_trace_distance || a.min_success;
    if (search) {
        SearchConfig cfg;
        cfg.T0 = a.T;
        cfg.dt_max = a.dt_max;
        cfg.max_doublings = a.max_doublings;
        cfg.mode = mode;
        cfg.target_fidelity = a.target_fidelity;
        cfg.max_trace_distance = a.max_trace_distance;
        cfg.min_p_success = a.min_success;
        if (!cfg.target_fidelity && !cfg.max_trace_distance && !cfg.min_p_success) cfg.target_fidelity = 0.95;
        const SearchResult result = search_T(program, cfg);
        emit(a.out, dump(search_to_json(result)), out);
        return kExitOk;
    }
    EvolutionConfig cfg;
    cfg.T = a.T;
    cfg.steps = a.steps.value_or(steps_for(a.T, a.dt_max));
    cfg.mode = mode;
    cfg.validate();
    const EvolutionResult result = evolve(program, cfg);
    const MeasurementOutcome m = measure_clock(result.full_state(), program);
    emit(a.out, dump(evolution_to_json(result, m)), out);
    return kExitOk;
}

int cmd_shapes(const ShapesArgs &a, std::ostream &out) {
    if (a.n < 1 || a.R < 1) throw ValidationError("--n and --R must be at least 1");
    const std::vector<GridShape> legal = enumerate_legal(a.n, a.R);
    const bool brute = a.n * (a.R + 1) <= kRulePassSiteCap;
    std::optional<ShapeDiscrepancy> d;
    if (brute) d = shape_discrepancy(a.n, a.R);
    if (a.json) {
        Json j;
        Json shapes = Json::array();
        for (const auto &s : legal) shapes.push_back(shape_to_json(s));
        j["legal"] = std::move(shapes);
        j["discrepancy"] = d ? discrepancy_to_json(*d) : Json(nullptr);
        emit(a.out, dump(j), out);
        return kExitOk;
    }
    std::ostringstream ss;
    ss << "# legal shapes n=" << a.n << " R=" << a.R << " count=" << legal.size() << "\n";
    for (const auto &s : legal) ss << s.to_string() << "\n";
    if (!d) {
        ss << "# discrepancy skipped: n(R+1) > " << kRulePassSiteCap << "\n";
    } else {
        ss << "# rule-pass count=" << d->rule_pass.size() << "\n";
        ss << "# legal but failing rules count=" << d->legal_not_passing.size() << "\n";
        for (const auto &s : d->legal_not_passing) ss << s.to_string() << "\n";
        ss << "# passing rules but not legal count=" << d->passing_not_legal.size() << "\n";
        for (const auto &s : d->passing_not_legal) ss << s.to_string() << "\n";
    }
    emit(a.out, ss.str(), out);
    return kExitOk;
}

int cmd_markov(const MarkovArgs &a, std::ostream &out) {
    require_finite(a.s, "--s");
    if (a.s < 0.0 || a.s > 1.0) throw ValidationError("--s must lie in [0, 1]");
    const SubspaceMode mode = subspace_mode_from_string(a.mode);
    const CutMode cut = cut_mode_from_string(a.cut);
    const AdiabaticProgram program = program_from_json(read_json_file(a.prog));
    const SubspaceBasis basis = subspace_basis(program, mode);
    const Matrix H = restrict(interpolate(program, a.s), basis).matrix;
    if (H.imag().cwiseAbs().maxCoeff() > 1e-12) {
        throw ValidationError("markov: restricted Hamiltonian is not real; choose a real subspace");
    }
    const MarkovChain chain = perron_chain(H.real());
    const ConductanceReport c = conductance(chain, cut);
    const RealVector rows = chain.P.rowwise().sum();
    const RealVector drift = (chain.pi.transpose() * chain.P).transpose() - chain.pi;
    Json j;
    j["s"] = a.s;
    j["mode"] = to_string(mode);
    j["chain"] = chain_to_json(chain);
    j["conductance"] = conductance_to_json(c);
    j["checks"] = Json{{"row_sum_error", (rows.array() - 1.0).abs().maxCoeff()},
                       {"stationarity_error", drift.cwiseAbs().maxCoeff()},
                       {"gap_identity", chain.gap * (1.0 - chain.lambda0)},
                       {"delta_M", chain.delta_M},
                       {"cheeger_ok", chain.gap >= c.bound - 1e-12}};
    emit(a.out, dump(j), out);
    return kExitOk;
}

// Property suite ---------------------------------------------------------

class Suite {
public:
    void record(const std::string &name, bool ok, const std::string &detail) {
        lines_ << (ok ? "PASS " : "FAIL ") << name << "  " << detail << "\n";
        ++total_;
        if (ok) ++passed_;
    }
    bool all() const {
        return passed_ == total_;
    }
    std::string text() const {
        std::ostringstream ss;
        ss << lines_.str() << "summary: " << passed_ << "/" << total_ << " passed\n";
        return ss.str();
    }

private:
    std::ostringstream lines_;
    int total_ = 0;
    int passed_ = 0;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double restriction_error(const AdiabaticProgram &p, const SubspaceBasis &basis, const std::vector<double> &ss) {
    double worst = 0.0;
    for (double s : ss) {
        const Matrix r = restrict(interpolate(p, s), basis).matrix;
        const Matrix closed = s0_closed_form(s, p.L).cast<Complex>();
        worst = std::max(worst, (r - closed).norm());
    }
    return worst;
}

int cmd_verify(const VerifyArgs &a, std::ostream &out) {
    if (a.instances < 0) throw ValidationError("--instances must be nonnegative");
    const Circuit circuit = ensure_min_length(circuit_from_json(read_json_file(a.circuit)));
    Rng rng(a.seed);
    Suite suite;
    const int L = circuit.length();
    const std::vector<double> quarter{0.0, 0.25, 0.5, 0.75, 1.0};

    const AdiabaticProgram p5 = build_5local(circuit);
    const SubspaceBasis s0 = subspace_basis(p5, SubspaceMode::S0);
    {
        const double e = restriction_error(p5, s0, quarter);
        suite.record("restriction_5local", e <= 1e-10, "max error " + fmt(e));
    }
    if (circuit.n + L <= 20) {
        const AdiabaticProgram p3 = build_3local(circuit);
        const SubspaceBasis b3 = subspace_basis(p3, SubspaceMode::S0);
        const double e = restriction_error(p3, b3, quarter);
        suite.record("restriction_3local", e <= 1e-10, "max error " + fmt(e));
    } else {
        suite.record("restriction_3local", true, "skipped: n + L > 20");
    }
    {
        const double r0 = apply(p5.h_init, initial_state(p5)).norm();
        const double r1 = apply(p5.h_final, history_state(p5)).norm();
        suite.record("ground_init", r0 <= 1e-10, "||H_init gamma_0|| = " + fmt(r0));
        suite.record("ground_final", r1 <= 1e-10, "||H_final eta|| = " + fmt(r1));
    }
    {
        const GapProfile prof = gap_profile(p5, SubspaceMode::S0, uniform_samples(101));
        const double floor = 1.0 / (144.0 * L * L);
        suite.record("gap_floor", prof.min_gap >= floor, "min gap " + fmt(prof.min_gap) + " floor " + fmt(floor));
    }
    {
        bool ok = true;
        double worst = 1.0;
        for (double s : {0.0, 0.1, 0.2, 0.3}) {
            const GerschgorinReport g = gerschgorin(s0_closed_form(s, L).cast<Complex>());
            const double gap = g.eigenvalues[1] - g.eigenvalues[0];
            worst = std::min(worst, gap);
            ok = ok && g.all_contained && g.counts_match && !g.components.empty() &&
                 g.components.front().discs.size() == 1 && gap >= 1.0 / 3.0;
        }
        suite.record("gerschgorin_split", ok, "min gap for s < 1/3: " + fmt(worst));
    }
    {
        bool ok = true;
        double phi_min = 1.0, identity_err = 0.0;
        for (double s : {1.0 / 3.0, 0.5, 0.75, 1.0}) {
            const MarkovChain chain = perron_chain(s0_closed_form(s, L));
            const ConductanceReport c =
                conductance(chain, L + 1 <= kExhaustiveCap ? CutMode::Exhaustive : CutMode::PrefixSuffix);
            phi_min = std::min(phi_min, c.phi);
            identity_err = std::max(identity_err, std::abs(chain.gap * (1.0 - chain.lambda0) - chain.delta_M));
            ok = ok && c.phi >= 1.0 / (6.0 * L) - 1e-12 && chain.gap >= c.bound - 1e-12;
        }
        suite.record("conductance", ok, "min phi " + fmt(phi_min) + " vs 1/(6L) " + fmt(1.0 / (6.0 * L)));
        suite.record("markov_identity", identity_err <= 1e-9, "max error " + fmt(identity_err));
    }
    {
        bool ok = true;
        for (int k = 0; k <= 20; ++k) {
            const Spectrum sp = eigen_low(s0_closed_form(k / 20.0, L).cast<Complex>(), 1, true);
            ok = ok && check_monotone(Vector(sp.eigenvectors.col(0)), 1e-9);
        }
        suite.record("monotone_ground", ok, "s = 0, 0.05, ..., 1");
    }
    {
        int ok = 0;
        for (int t = 0; t < a.instances; ++t) {
            std::uniform_int_distribution<int> dim_d(4, 16);
            const int dim = dim_d(rng);
            std::uniform_int_distribution<int> sub_d(2, dim - 1);
            const Matrix S = random_isometry(dim, sub_d(rng), rng);
            const Matrix H1 = random_hermitian(dim, rng);
            const double K = hermitian_norm(H1);
            std::uniform_real_distribution<double> factor(2.5, 50.0);
            if (leak_certify(H1, S, factor(rng) * K).holds()) ++ok;
        }
        suite.record("leak_lemma_random", ok == a.instances,
                     std::to_string(ok) + "/" + std::to_string(a.instances) + " instances");
    }
    {
        int ok = 0;
        for (int t = 0; t < a.instances; ++t) {
            std::uniform_int_distribution<int> dim_d(2, 12);
            const int dim = dim_d(rng);
            const Matrix A = random_hermitian(dim, rng);
            const Matrix B = random_hermitian(dim, rng);
            const AngleReport r = angle_certify(A * A, B * B);
            if (r.holds) ++ok;
        }
        suite.record("angle_lemma_random", ok == a.instances,
                     std::to_string(ok) + "/" + std::to_string(a.instances) + " instances");
    }
    emit(a.out, suite.text(), out);
    return suite.all() ? kExitOk : kExitNumerical;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"adiaforge: circuit-to-Hamiltonian compiler and adiabatic analysis toolkit"};
    app.require_subcommand(1);

    CompileArgs ca;
    auto *compile = app.add_subcommand("compile", "Compile a circuit JSON file into an adiabatic program JSON");
    compile->add_option("--circuit", ca.circuit, "Circuit JSON file")->required();
    compile->add_option("--flavor", ca.flavor, "5local, 3local or grid")->capture_default_str();
    compile->add_option("--epsilon", ca.epsilon, "Target precision for the penalty J")->capture_default_str();
    compile->add_option("--pad-epsilon", ca.pad_epsilon, "Pad with identities for this epsilon");
    compile->add_option("--J", ca.J, "Penalty override (must exceed twice the non-clock norm bound)");
    compile->add_option("--L-exponent", ca.l_exponent, "Exponent p in the default J = eps^-2 L^p (5 or 6)")
        ->capture_default_str();
    compile->add_option("--out", ca.out, "Output file (stdout when omitted)");

    GapArgs ga;
    auto *gap = app.add_subcommand("gap", "Write the spectral gap profile as CSV");
    gap->add_option("--prog", ga.prog, "Program JSON file")->required();
    gap->add_option("--mode", ga.mode, "full, S or S0")->capture_default_str();
    gap->add_option("--samples", ga.samples, "Number of evenly spaced s samples")->capture_default_str();
    gap->add_option("--out", ga.out, "Output file (stdout when omitted)");

    EvolveArgs ea;
    auto *evolve_cmd = app.add_subcommand("evolve", "Simulate the adiabatic evolution and measure the clock");
    evolve_cmd->add_option("--prog", ea.prog, "Program JSON file")->required();
    evolve_cmd->add_option("--T", ea.T, "Total time (initial time when searching)")->capture_default_str();
    evolve_cmd->add_option("--steps", ea.steps, "Time steps (default ceil(T / dt-max))");
    evolve_cmd->add_option("--dt-max", ea.dt_max, "Largest time step")->capture_default_str();
    evolve_cmd->add_option("--mode", ea.mode, "auto, full or subspace")->capture_default_str();
    evolve_cmd->add_flag("--search", ea.search, "Double T until the acceptance predicates hold");
    evolve_cmd->add_option("--target-fidelity", ea.target_fidelity, "Search predicate on fidelity");
    evolve_cmd->add_option("--max-trace-distance", ea.max_trace_distance, "Search predicate on trace distance");
    evolve_cmd->add_option("--min-success", ea.min_success, "Search predicate on P(clock >= L_original)");
    evolve_cmd->add_option("--max-doublings", ea.max_doublings, "Search budget")->capture_default_str();
    evolve_cmd->add_option("--out", ea.out, "Output file (stdout when omitted)");

    ShapesArgs sa;
    auto *shapes = app.add_subcommand("shapes", "List legal grid shapes and the rule discrepancy");
    shapes->add_option("--n", sa.n, "Rows (qubits)")->capture_default_str();
    shapes->add_option("--R", sa.R, "Rounds")->capture_default_str();
    shapes->add_flag("--json", sa.json, "JSON output");
    shapes->add_option("--out", sa.out, "Output file (stdout when omitted)");

    VerifyArgs va;
    auto *verify = app.add_subcommand("verify", "Run the property suite on a circuit");
    verify->add_option("--circuit", va.circuit, "Circuit JSON file")->required();
    verify->add_option("--seed", va.seed, "Seed for random lemma instances")->capture_default_str();
    verify->add_option("--instances", va.instances, "Random instances per lemma")->capture_default_str();
    verify->add_option("--out", va.out, "Output file (stdout when omitted)");

    MarkovArgs ma;
    auto *markov = app.add_subcommand("markov", "Perron chain and conductance of H(s) restricted to a subspace");
    markov->add_option("--prog", ma.prog, "Program JSON file")->required();
    markov->add_option("--s", ma.s, "Schedule parameter")->capture_default_str();
    markov->add_option("--mode", ma.mode, "full, S or S0")->capture_default_str();
    markov->add_option("--cut", ma.cut, "exhaustive or prefix_suffix")->capture_default_str();
    markov->add_option("--out", ma.out, "Output file (stdout when omitted)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (*compile) return cmd_compile(ca, out, err);
        if (*gap) return cmd_gap(ga, out);
        if (*evolve_cmd) return cmd_evolve(ea, out);
        if (*shapes) return cmd_shapes(sa, out);
        if (*verify) return cmd_verify(va, out);
        if (*markov) return cmd_markov(ma, out);
    } catch (const ValidationError &e) {
        err << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const NumericalError &e) {
        err << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitValidation;
}

}  // namespace adiaforge::cli
