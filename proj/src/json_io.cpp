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

#include "adiaforge/json_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace adiaforge {

namespace {

[[noreturn]] void schema_error(const std::string &where, const std::string &what) {
    throw ValidationError("schema: " + where + ": " + what);
}

const Json &require(const Json &j, const char *key, const std::string &where) {
    if (!j.is_object() || !j.contains(key)) schema_error(where, std::string("missing key \"") + key + "\"");
    return j.at(key);
}

int as_int(const Json &j, const std::string &where) {
    if (!j.is_number_integer()) schema_error(where, "expected an integer");
    return j.get<int>();
}

double as_double(const Json &j, const std::string &where) {
    if (!j.is_number()) schema_error(where, "expected a number");
    return j.get<double>();
}

std::optional<double> optional_double(const Json &j, const char *key, const std::string &where) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return as_double(j.at(key), where + "." + key);
}

Json optional_to_json(const std::optional<double> &v) {
    return v ? Json(*v) : Json(nullptr);
}

// Standard gate for a name and targets, if the name is known.
std::optional<Gate> standard_gate(const std::string &name, const std::vector<int> &t) {
    if (name == "X" && t.size() == 1) return gates::X(t[0]);
    if (name == "H" && t.size() == 1) return gates::H(t[0]);
    if (name == "I" && t.size() == 1) return gates::I(t[0]);
    if (name == "I" && t.size() == 2) return gates::I2(t[0], t[1]);
    if (name == "CNOT" && t.size() == 2) return gates::CNOT(t[0], t[1]);
    if (name == "SWAP" && t.size() == 2) return gates::SWAP(t[0], t[1]);
    return std::nullopt;
}

Json term_to_json(const LocalTerm &t) {
    Json j;
    j["support"] = t.support;
    j["coefficient"] = t.coefficient;
    j["matrix"] = matrix_to_json(t.matrix);
    if (!t.label.empty()) j["label"] = t.label;
    return j;
}

LocalTerm term_from_json(const Json &j, const std::string &where) {
    LocalTerm t;
    const Json &support = require(j, "support", where);
    if (!support.is_array()) schema_error(where + ".support", "expected an array");
    for (std::size_t i = 0; i < support.size(); ++i) {
        t.support.push_back(as_int(support[i], where + ".support[" + std::to_string(i) + "]"));
    }
    t.coefficient = as_double(require(j, "coefficient", where), where + ".coefficient");
    t.matrix = matrix_from_json(require(j, "matrix", where), where + ".matrix");
    if (j.contains("label")) {
        if (!j["label"].is_string()) schema_error(where + ".label", "expected a string");
        t.label = j["label"].get<std::string>();
    }
    return t;
}

Json sum_to_json(const HamiltonianSum &sum) {
    Json arr = Json::array();
    for (const auto &t : sum.terms) arr.push_back(term_to_json(t));
    return arr;
}

Json trial_to_json(const TrialRecord &t) {
    return Json{{"T", t.T},
                {"steps", t.steps},
                {"fidelity", t.fidelity},
                {"p_success", t.p_success},
                {"trace_distance", t.trace_distance},
                {"accepted", t.accepted}};
}

}  // namespace

Json matrix_to_json(const Matrix &m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json &j, const std::string &where) {
    if (!j.is_array() || j.empty()) schema_error(where, "expected a nonempty array of rows");
    const std::size_t rows = j.size();
    Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(rows));
    for (std::size_t r = 0; r < rows; ++r) {
        const Json &row = j[r];
        if (!row.is_array() || row.size() != rows) {
            schema_error(where, "matrix must be square (row " + std::to_string(r) + ")");
        }
        for (std::size_t c = 0; c < rows; ++c) {
            const Json &z = row[c];
            const std::string at = where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]";
            if (!z.is_array() || z.size() != 2) schema_error(at, "complex entries are [re, im] pairs");
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                Complex(as_double(z[0], at), as_double(z[1], at));
        }
    }
    return m;
}

Json circuit_to_json(const Circuit &circuit) {
    Json gates = Json::array();
    for (const auto &g : circuit.gates) {
        Json jg;
        const auto std_gate = standard_gate(g.name, g.targets);
        const bool standard = std_gate && std_gate->unitary.isApprox(g.unitary, 0.0);
        jg["name"] = standard ? g.name : "custom";
        jg["targets"] = g.targets;
        if (!standard) jg["matrix"] = matrix_to_json(g.unitary);
        gates.push_back(std::move(jg));
    }
    return Json{{"n", circuit.n}, {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const Json &j) {
    Circuit c;
    c.n = as_int(require(j, "n", "circuit"), "circuit.n");
    const Json &gates = require(j, "gates", "circuit");
    if (!gates.is_array()) schema_error("circuit.gates", "expected an array");
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const std::string where = "circuit.gates[" + std::to_string(i) + "]";
        const Json &jg = gates[i];
        const Json &jname = require(jg, "name", where);
        if (!jname.is_string()) schema_error(where + ".name", "expected a string");
        const std::string name = jname.get<std::string>();
        const Json &jt = require(jg, "targets", where);
        if (!jt.is_array()) schema_error(where + ".targets", "expected an array");
        std::vector<int> targets;
        for (std::size_t k = 0; k < jt.size(); ++k) targets.push_back(as_int(jt[k], where + ".targets"));
        if (name == "custom") {
            c.gates.push_back(gates::custom(targets, matrix_from_json(require(jg, "matrix", where), where + ".matrix")));
        } else {
            auto g = standard_gate(name, targets);
            if (!g) schema_error(where, "unknown gate '" + name + "' for " + std::to_string(targets.size()) + " targets");
            if (jg.contains("matrix")) schema_error(where, "matrix is only allowed for custom gates");
            c.gates.push_back(std::move(*g));
        }
    }
    c.validate();
    return c;
}

Json program_to_json(const AdiabaticProgram &p) {
    Json j;
    j["flavor"] = to_string(p.flavor);
    j["n"] = p.n;
    j["L"] = p.L;
    j["L_original"] = p.L_original;
    j["R"] = p.R;
    j["particle_dim"] = p.h_init.particle_dim;
    j["particle_count"] = p.h_init.particle_count;
    j["k"] = p.locality();
    j["epsilon"] = optional_to_json(p.epsilon);
    j["J"] = optional_to_json(p.J);
    j["circuit"] = circuit_to_json(p.circuit);
    j["h_init"] = sum_to_json(p.h_init);
    j["h_final"] = sum_to_json(p.h_final);
    return j;
}

AdiabaticProgram program_from_json(const Json &j) {
    AdiabaticProgram p;
    const Json &flavor = require(j, "flavor", "program");
    if (!flavor.is_string()) schema_error("program.flavor", "expected a string");
    p.flavor = flavor_from_string(flavor.get<std::string>());
    p.n = as_int(require(j, "n", "program"), "program.n");
    p.L = as_int(require(j, "L", "program"), "program.L");
    p.L_original = j.contains("L_original") ? as_int(j["L_original"], "program.L_original") : p.L;
    p.R = j.contains("R") ? as_int(j["R"], "program.R") : 0;
    const int d = as_int(require(j, "particle_dim", "program"), "program.particle_dim");
    const int N = as_int(require(j, "particle_count", "program"), "program.particle_count");
    p.epsilon = optional_double(j, "epsilon", "program");
    p.J = optional_double(j, "J", "program");
    p.circuit = circuit_from_json(require(j, "circuit", "program"));
    p.h_init = HamiltonianSum{N, d, {}};
    p.h_final = HamiltonianSum{N, d, {}};
    for (const char *side : {"h_init", "h_final"}) {
        const Json &arr = require(j, side, "program");
        if (!arr.is_array()) schema_error(std::string("program.") + side, "expected an array of terms");
        auto &sum = std::string(side) == "h_init" ? p.h_init : p.h_final;
        for (std::size_t i = 0; i < arr.size(); ++i) {
            sum.terms.push_back(term_from_json(arr[i], std::string("program.") + side + "[" + std::to_string(i) + "]"));
        }
    }
    p.validate();
    if (j.contains("k") && as_int(j["k"], "program.k") != p.locality()) {
        schema_error("program.k", "declared locality " + std::to_string(j["k"].get<int>()) +
                                      " does not match the terms (" + std::to_string(p.locality()) + ")");
    }
    if (p.circuit.n != p.n || p.L < 1 || p.L_original < 1 || p.L_original > p.L) {
        schema_error("program", "inconsistent n / L / L_original metadata");
    }
    if (p.flavor == Flavor::Grid) {
        GridLayoutCircuit{p.n, p.R, p.circuit.gates}.validate();
    } else if (p.circuit.length() != p.L || N != p.n + p.L || d != 2) {
        schema_error("program", "clock flavors need particle_count = n + L, particle_dim = 2, and L gates");
    }
    return p;
}

Json evolution_to_json(const EvolutionResult &r, const MeasurementOutcome &m) {
    Json j;
    j["T"] = r.T;
    j["steps"] = r.steps;
    j["mode"] = to_string(r.mode);
    j["fidelity"] = r.fidelity;
    j["norm_drift"] = r.norm_drift;
    j["runtime_metric"] = r.runtime_metric;
    j["max_norm"] = r.max_norm;
    j["max_norm_exact"] = r.max_norm_exact;
    j["measurement"] = Json{{"p_success", m.p_success},
                            {"trace_distance", m.trace_distance},
                            {"trace_distance_legal", m.trace_distance_legal},
                            {"illegal", m.illegal},
                            {"clock_histogram", m.clock_histogram}};
    return j;
}

Json search_to_json(const SearchResult &search) {
    Json j = evolution_to_json(search.result, search.measurement);
    j["found"] = search.found;
    Json trials = Json::array();
    for (const auto &t : search.trials) trials.push_back(trial_to_json(t));
    j["search"] = std::move(trials);
    return j;
}

Json pipeline_to_json(const PipelineReport &r) {
    Json j;
    j["flavor"] = to_string(r.flavor);
    j["epsilon"] = r.epsilon;
    j["L_original"] = r.L_original;
    j["L_padded"] = r.L_padded;
    j["dimension"] = r.dimension;
    j["gap_mode"] = to_string(r.profile.mode);
    j["min_gap"] = r.profile.min_gap;
    j["argmin_s"] = r.profile.argmin_s;
    j["norm_diff"] = r.norm_diff;
    j["T_estimate"] = r.T_estimate;
    j["evolution"] = search_to_json(r.search);
    Json sweep = Json::array();
    for (const auto &t : r.sweep) sweep.push_back(trial_to_json(t));
    j["sweep"] = std::move(sweep);
    j["sweep_monotone"] = r.sweep_monotone;
    j["step_doubling_change"] = r.step_doubling_change;
    return j;
}

Json conductance_to_json(const ConductanceReport &r) {
    return Json{{"phi", r.phi},
                {"witness_B", r.witness},
                {"flow", r.flow},
                {"bound", r.bound},
                {"weight", r.weight},
                {"mode", to_string(r.mode)}};
}

Json chain_to_json(const MarkovChain &c) {
    Json P = Json::array();
    for (Eigen::Index i = 0; i < c.P.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < c.P.cols(); ++k) row.push_back(c.P(i, k));
        P.push_back(std::move(row));
    }
    auto vec = [](const RealVector &v) {
        Json a = Json::array();
        for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
        return a;
    };
    return Json{{"P", std::move(P)},         {"pi", vec(c.pi)},       {"alpha", vec(c.alpha)},
                {"mu", c.mu},                {"Z", c.Z},              {"lambda0", c.lambda0},
                {"delta_M", c.delta_M},      {"gap", c.gap},          {"p_spectrum", vec(c.p_spectrum)},
                {"primitivity_power", c.primitivity_power}};
}

Json shape_to_json(const GridShape &shape) {
    Json rows = Json::array();
    for (int i = 1; i <= shape.n; ++i) {
        std::string row;
        for (int c = 0; c <= shape.R; ++c) row += phase_char(shape.at(i, c));
        rows.push_back(row);
    }
    return Json{{"n", shape.n}, {"R", shape.R}, {"phases", std::move(rows)}};
}

Json discrepancy_to_json(const ShapeDiscrepancy &d) {
    auto list = [](const std::vector<GridShape> &shapes) {
        Json a = Json::array();
        for (const auto &s : shapes) a.push_back(shape_to_json(s));
        return a;
    };
    return Json{{"legal", list(d.legal)},
                {"rule_pass_count", d.rule_pass.size()},
                {"legal_not_passing", list(d.legal_not_passing)},
                {"passing_not_legal", list(d.passing_not_legal)}};
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json_file(const std::string &path) {
    const std::string text = read_text_file(path);
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw ValidationError("malformed JSON in '" + path + "': " + e.what());
    }
}

void write_file_atomic(const std::string &path, const std::string &content) {
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ValidationError("cannot write file '" + tmp.string() + "'");
        out << content;
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw ValidationError("failed writing '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw ValidationError("cannot rename onto '" + path + "'");
    }
}

}  // namespace adiaforge
