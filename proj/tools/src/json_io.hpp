// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qft-infocalc Authors
//
// JSON (de)serialization for the CLI: quantum states (pure amplitude vectors
// or density matrices) and information-flow diagrams. Parsers throw
// qic::input_error with the offending field named.
#pragma once

#include <string>

#include <json.hpp>

#include "qic/protocols.hpp"
#include "qic/states.hpp"

namespace qic::cli {

// Reads and parses a JSON document; throws input_error on IO/syntax errors.
nlohmann::json load_json_file(const std::string& path);

// State document: either {"amplitudes": [[re,im],...], "dims": [...]} for a
// pure state or {"matrix": [[[re,im],...],...], "dims": [...]} for a density
// matrix. Returns the density matrix either way.
DensityMatrix parse_state_density(const nlohmann::json& doc);

// Pure single-qubit state: {"amplitudes": [[re,im],[re,im]], "dims": [2]}.
QubitState parse_qubit(const nlohmann::json& doc);

// Diagram document: {"name": str?, "vertices": [{"id", "kind"}],
// "edges": [{"from", "to", "species", "multiplicity"?}]}.
InfoDiagram parse_diagram(const nlohmann::json& doc);

// [[re,im], ...]
nlohmann::json amplitudes_json(const CVector& v);

// {"dims": [...], "matrix": [[[re,im],...],...]} — same schema the parsers
// accept, so command output can be fed back in.
nlohmann::json density_json(const DensityMatrix& rho);

}  // namespace qic::cli
