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

#include <string>

#include "json.hpp"

#include "adiaforge/circuit.hpp"
#include "adiaforge/evolution.hpp"
#include "adiaforge/grid6.hpp"
#include "adiaforge/local_hamiltonian.hpp"
#include "adiaforge/markov.hpp"

namespace adiaforge {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const Matrix &m);
Matrix matrix_from_json(const Json &j, const std::string &where);

Json circuit_to_json(const Circuit &circuit);
Circuit circuit_from_json(const Json &j);

Json program_to_json(const AdiabaticProgram &program);
AdiabaticProgram program_from_json(const Json &j);

Json evolution_to_json(const EvolutionResult &result, const MeasurementOutcome &measurement);
Json search_to_json(const SearchResult &search);
Json pipeline_to_json(const PipelineReport &report);

Json conductance_to_json(const ConductanceReport &report);
Json chain_to_json(const MarkovChain &chain);

Json shape_to_json(const GridShape &shape);
Json discrepancy_to_json(const ShapeDiscrepancy &d);

/// Throws ValidationError naming the path when the file cannot be read or
/// parsed.
Json read_json_file(const std::string &path);
std::string read_text_file(const std::string &path);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::string &path, const std::string &content);

}  // namespace adiaforge
