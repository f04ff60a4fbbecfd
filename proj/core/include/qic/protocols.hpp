// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qft-infocalc Authors
//
// Information-flow diagrams with weighted conservation checking and time
// reversal, plus the two canonical two-party protocols they describe:
// teleportation and dense coding.
#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qic/complex_matrix.hpp"
#include "qic/random.hpp"
#include "qic/states.hpp"

namespace qic {

// Information carriers that can flow along a diagram edge. Quantum carriers
// come in particle/antiparticle pairs (qubit/antiqubit, ebit/anti-ebit);
// classical bits have no antiparticle.
enum class Species { q, qbar, c, e, ebar };

const char* species_name(Species s);
Species species_from_name(const std::string& name);  // throws input_error

// Whether a species is a quantum carrier (affected by time reversal).
bool is_quantum(Species s);

// Information weight in bits carried by one edge of each species.
// Antiparticle carriers count negatively, so a carrier flowing backward in
// time can be redrawn forward with its antiparticle at no change in any
// vertex balance.
struct SpeciesWeights {
  double q = 1.0;
  double qbar = -1.0;
  double c = 1.0;
  double e = 1.0;
  double ebar = -1.0;

  double weight(Species s) const;
  // Throws input_error unless qbar == -q and ebar == -e.
  void validate() const;
};

enum class VertexKind { source, sink, measurement, unitary };

const char* vertex_kind_name(VertexKind k);
VertexKind vertex_kind_from_name(const std::string& name);  // throws input_error

struct Vertex {
  std::string id;
  VertexKind kind = VertexKind::unitary;
};

struct Edge {
  std::string from;
  std::string to;
  Species species = Species::q;
  std::size_t multiplicity = 1;
};

struct InfoDiagram {
  std::string name;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

// Structural validation: vertex ids unique and non-empty, edges reference
// known vertices, multiplicities >= 1. Throws input_error on violation.
void validate_diagram(const InfoDiagram& diagram);

struct VertexBalance {
  std::string vertex_id;
  VertexKind kind = VertexKind::unitary;
  double inflow = 0.0;    // weighted bits entering the vertex
  double outflow = 0.0;   // weighted bits leaving the vertex
  double residual = 0.0;  // |inflow - outflow|
};

struct ConservationReport {
  std::vector<VertexBalance> balances;  // interior vertices only
  double max_residual = 0.0;
  bool pass = false;  // max_residual == 0 within 1e-12
};

// Checks weighted information balance at every interior vertex (sources and
// sinks are boundary terms and are excluded). A diagram conserves
// information when every interior vertex's weighted inflow equals its
// weighted outflow.
ConservationReport check_conservation(const InfoDiagram& diagram,
                                      const SpeciesWeights& weights = SpeciesWeights{});

// Time reversal: every quantum edge is reversed and conjugated (its species
// swaps with its antiparticle); classical edges are left untouched, since a
// classical record does not propagate backward. Preserves every vertex
// balance exactly.
InfoDiagram time_reversed(const InfoDiagram& diagram);

// Canonical edge multiset: antiparticle edges are redrawn as reversed
// particle edges, parallel edges are merged, and the result is sorted.
// Two diagrams describe the same information flow iff their canonical edge
// multisets and vertex sets coincide.
std::vector<Edge> canonical_edges(const InfoDiagram& diagram);

bool equivalent(const InfoDiagram& a, const InfoDiagram& b);

// Built-in diagrams, by CLI token:
//   fig1 - teleportation: one qubit carried by two classical bits plus a
//          shared ebit.
//   fig2 - dense coding: two classical bits carried by one qubit plus a
//          shared ebit.
//   fig3 - dense coding drawn with the ebit flowing backward in time as an
//          anti-ebit input to the encoder; equivalent to fig2.
InfoDiagram builtin_diagram(const std::string& token);  // throws input_error
std::vector<std::string> builtin_diagram_tokens();

// --- Teleportation ---

struct TeleportBranch {
  std::pair<int, int> bits;  // classical message sent to the receiver
  std::string bell_label;    // measurement outcome: phi+, phi-, psi+, psi-
  double probability = 0.0;  // always 1/4 for a maximally entangled resource
  QubitState output;         // receiver's state after the correction
  double fidelity = 0.0;     // |<input|output>|^2, 1 up to global phase
};

// Simulates the full protocol: input (x) Bell pair, Bell measurement on the
// sender's two qubits, conditional correction on the receiver's qubit.
// Returns all four measurement branches in bit order 00, 01, 10, 11.
std::array<TeleportBranch, 4> teleport_branches(const QubitState& input);

// Samples one branch according to the branch probabilities.
TeleportBranch teleport(const QubitState& input, Rng& rng);

// --- Dense coding ---

// Encodes two classical bits on the sender's half of a shared Bell pair:
// first bit applies a bit flip, second bit a phase flip. Returns the
// resulting two-qubit state (dims {2,2}).
CVector superdense_encode(std::pair<int, int> bits);

struct SuperdenseResult {
  std::pair<int, int> bits;  // decoded message
  std::string bell_label;    // Bell outcome observed by the receiver
  double probability = 0.0;  // probability of that outcome (1 for valid encodings)
};

// Decodes a two-qubit state by Bell measurement. The reported bits are the
// most probable outcome's.
SuperdenseResult superdense_decode(const CVector& state);

// Round trip: encode then decode. The identity on {0,1}^2.
SuperdenseResult superdense(std::pair<int, int> bits);

}  // namespace qic
