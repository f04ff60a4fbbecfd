// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qft-infocalc Authors
#include "qic/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include "qic/errors.hpp"

namespace qic {

namespace {

constexpr double kBalanceTol = 1e-12;

// Bell basis in bit order 00, 01, 10, 11: the first bit records whether a
// bit flip separates the pair, the second whether a phase flip does.
struct BellState {
  std::pair<int, int> bits;
  const char* label;
  Complex amp[4];  // amplitudes over |00>, |01>, |10>, |11>
};

const std::array<BellState, 4>& bell_basis() {
  static const double r = 1.0 / std::sqrt(2.0);
  static const std::array<BellState, 4> basis = {{
      {{0, 0}, "phi+", {r, 0.0, 0.0, r}},
      {{0, 1}, "phi-", {r, 0.0, 0.0, -r}},
      {{1, 0}, "psi+", {0.0, r, r, 0.0}},
      {{1, 1}, "psi-", {0.0, r, -r, 0.0}},
  }};
  return basis;
}

void require_bit(int b, const char* who) {
  if (b != 0 && b != 1) throw input_error(std::string(who) + ": bits must be 0 or 1");
}

}  // namespace

const char* species_name(Species s) {
  switch (s) {
    case Species::q: return "q";
    case Species::qbar: return "qbar";
    case Species::c: return "c";
    case Species::e: return "e";
    case Species::ebar: return "ebar";
  }
  throw input_error("species_name: unknown species");
}

Species species_from_name(const std::string& name) {
  if (name == "q") return Species::q;
  if (name == "qbar") return Species::qbar;
  if (name == "c") return Species::c;
  if (name == "e") return Species::e;
  if (name == "ebar") return Species::ebar;
  throw input_error("unknown species '" + name + "' (expected q, qbar, c, e, or ebar)");
}

bool is_quantum(Species s) { return s != Species::c; }

double SpeciesWeights::weight(Species s) const {
  switch (s) {
    case Species::q: return q;
    case Species::qbar: return qbar;
    case Species::c: return c;
    case Species::e: return e;
    case Species::ebar: return ebar;
  }
  throw input_error("SpeciesWeights::weight: unknown species");
}

void SpeciesWeights::validate() const {
  if (qbar != -q || ebar != -e)
    throw input_error(
        "SpeciesWeights: antiparticle weights must be the negatives of their "
        "particle weights (qbar = -q, ebar = -e)");
}

const char* vertex_kind_name(VertexKind k) {
  switch (k) {
    case VertexKind::source: return "source";
    case VertexKind::sink: return "sink";
    case VertexKind::measurement: return "measurement";
    case VertexKind::unitary: return "unitary";
  }
  throw input_error("vertex_kind_name: unknown kind");
}

VertexKind vertex_kind_from_name(const std::string& name) {
  if (name == "source") return VertexKind::source;
  if (name == "sink") return VertexKind::sink;
  if (name == "measurement") return VertexKind::measurement;
  if (name == "unitary") return VertexKind::unitary;
  throw input_error("unknown vertex kind '" + name +
                    "' (expected source, sink, measurement, or unitary)");
}

void validate_diagram(const InfoDiagram& diagram) {
  std::set<std::string> ids;
  for (const Vertex& v : diagram.vertices) {
    if (v.id.empty()) throw input_error("diagram: vertex id must be non-empty");
    if (!ids.insert(v.id).second)
      throw input_error("diagram: duplicate vertex id '" + v.id + "'");
  }
  for (const Edge& e : diagram.edges) {
    if (!ids.count(e.from))
      throw input_error("diagram: edge references unknown vertex '" + e.from + "'");
    if (!ids.count(e.to))
      throw input_error("diagram: edge references unknown vertex '" + e.to + "'");
    if (e.multiplicity == 0)
      throw input_error("diagram: edge multiplicity must be at least 1");
  }
}

ConservationReport check_conservation(const InfoDiagram& diagram,
                                      const SpeciesWeights& weights) {
  validate_diagram(diagram);
  weights.validate();
  std::map<std::string, VertexBalance> balances;
  for (const Vertex& v : diagram.vertices) {
    if (v.kind == VertexKind::source || v.kind == VertexKind::sink) continue;
    balances[v.id] = VertexBalance{v.id, v.kind, 0.0, 0.0, 0.0};
  }
  for (const Edge& e : diagram.edges) {
    const double bits = weights.weight(e.species) * static_cast<double>(e.multiplicity);
    auto from_it = balances.find(e.from);
    if (from_it != balances.end()) from_it->second.outflow += bits;
    auto to_it = balances.find(e.to);
    if (to_it != balances.end()) to_it->second.inflow += bits;
  }
  ConservationReport report;
  for (const Vertex& v : diagram.vertices) {
    auto it = balances.find(v.id);
    if (it == balances.end()) continue;
    VertexBalance& b = it->second;
    b.residual = std::abs(b.inflow - b.outflow);
    report.max_residual = std::max(report.max_residual, b.residual);
    report.balances.push_back(b);
  }
  report.pass = report.max_residual <= kBalanceTol;
  return report;
}

InfoDiagram time_reversed(const InfoDiagram& diagram) {
  validate_diagram(diagram);
  InfoDiagram out;
  out.name = diagram.name + "-reversed";
  out.vertices = diagram.vertices;
  out.edges.reserve(diagram.edges.size());
  for (const Edge& e : diagram.edges) {
    if (!is_quantum(e.species)) {
      out.edges.push_back(e);
      continue;
    }
    Edge rev;
    rev.from = e.to;
    rev.to = e.from;
    rev.multiplicity = e.multiplicity;
    switch (e.species) {
      case Species::q: rev.species = Species::qbar; break;
      case Species::qbar: rev.species = Species::q; break;
      case Species::e: rev.species = Species::ebar; break;
      case Species::ebar: rev.species = Species::e; break;
      case Species::c: rev.species = Species::c; break;  // unreachable
    }
    out.edges.push_back(rev);
  }
  return out;
}

std::vector<Edge> canonical_edges(const InfoDiagram& diagram) {
  validate_diagram(diagram);
  std::map<std::tuple<std::string, std::string, int>, std::size_t> merged;
  for (const Edge& e : diagram.edges) {
    Edge canon = e;
    // An antiparticle edge is the same flow as the reversed particle edge.
    if (e.species == Species::qbar || e.species == Species::ebar) {
      canon.from = e.to;
      canon.to = e.from;
      canon.species = e.species == Species::qbar ? Species::q : Species::e;
    }
    merged[{canon.from, canon.to, static_cast<int>(canon.species)}] += canon.multiplicity;
  }
  std::vector<Edge> out;
  out.reserve(merged.size());
  for (const auto& [key, mult] : merged)
    out.push_back(Edge{std::get<0>(key), std::get<1>(key),
                       static_cast<Species>(std::get<2>(key)), mult});
  return out;
}

bool equivalent(const InfoDiagram& a, const InfoDiagram& b) {
  auto vertex_key = [](const InfoDiagram& d) {
    std::vector<std::pair<std::string, int>> key;
    key.reserve(d.vertices.size());
    for (const Vertex& v : d.vertices) key.emplace_back(v.id, static_cast<int>(v.kind));
    std::sort(key.begin(), key.end());
    return key;
  };
  if (vertex_key(a) != vertex_key(b)) return false;
  const std::vector<Edge> ca = canonical_edges(a);
  const std::vector<Edge> cb = canonical_edges(b);
  if (ca.size() != cb.size()) return false;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i].from != cb[i].from || ca[i].to != cb[i].to ||
        ca[i].species != cb[i].species || ca[i].multiplicity != cb[i].multiplicity)
      return false;
  }
  return true;
}

InfoDiagram builtin_diagram(const std::string& token) {
  const std::vector<Vertex> teleport_vertices = {
      {"SOURCE", VertexKind::source},
      {"M", VertexKind::measurement},
      {"U", VertexKind::unitary},
      {"SINK", VertexKind::sink},
  };
  if (token == "fig1") {
    // Teleportation: the sender measures the input qubit jointly with half of
    // a shared ebit; two classical bits steer the receiver's correction; the
    // receiver's ebit half enters as an antiparticle (it was committed before
    // the protocol's classical flow begins).
    InfoDiagram d;
    d.name = "teleportation";
    d.vertices = teleport_vertices;
    d.edges = {
        {"SOURCE", "M", Species::q, 1},
        {"SOURCE", "M", Species::e, 1},
        {"SOURCE", "U", Species::ebar, 1},
        {"M", "U", Species::c, 2},
        {"U", "SINK", Species::q, 1},
    };
    return d;
  }
  if (token == "fig2") {
    // Dense coding: two classical bits are encoded on half of a shared ebit;
    // the receiver's joint measurement recovers both bits.
    InfoDiagram d;
    d.name = "dense-coding";
    d.vertices = teleport_vertices;
    d.edges = {
        {"SOURCE", "U", Species::c, 2},
        {"U", "M", Species::e, 1},
        {"U", "M", Species::q, 1},
        {"M", "SINK", Species::c, 2},
    };
    return d;
  }
  if (token == "fig3") {
    // Dense coding with the shared ebit drawn backward in time: the encoder
    // receives an anti-ebit from the measurement instead of sending an ebit
    // to it. Equivalent to fig2.
    InfoDiagram d;
    d.name = "dense-coding-reversed-ebit";
    d.vertices = teleport_vertices;
    d.edges = {
        {"SOURCE", "U", Species::c, 2},
        {"M", "U", Species::ebar, 1},
        {"U", "M", Species::q, 1},
        {"M", "SINK", Species::c, 2},
    };
    return d;
  }
  throw input_error("unknown builtin diagram '" + token +
                    "' (expected fig1, fig2, or fig3)");
}

std::vector<std::string> builtin_diagram_tokens() { return {"fig1", "fig2", "fig3"}; }

std::array<TeleportBranch, 4> teleport_branches(const QubitState& input) {
  // Joint state: input qubit (x) Bell pair, amplitudes t[a][b][c] with a the
  // input, b the sender's ebit half, c the receiver's half.
  const double r = 1.0 / std::sqrt(2.0);
  Complex t[2][2][2] = {};
  const Complex psi[2] = {input.psi0(), input.psi1()};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) t[a][b][b] = psi[a] * r;

  std::array<TeleportBranch, 4> branches;
  for (std::size_t k = 0; k < 4; ++k) {
    const BellState& bell = bell_basis()[k];
    // Project qubits (a, b) onto this Bell state.
    Complex receiver[2] = {0.0, 0.0};
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          receiver[c] += std::conj(bell.amp[2 * a + b]) * t[a][b][c];
    const double prob = std::norm(receiver[0]) + std::norm(receiver[1]);
    const double inv = 1.0 / std::sqrt(prob);
    Complex collapsed[2] = {receiver[0] * inv, receiver[1] * inv};
    // Correction keyed by the classical bits: second bit -> phase flip,
    // first bit -> bit flip (applied in that order).
    if (bell.bits.second) collapsed[1] = -collapsed[1];
    if (bell.bits.first) std::swap(collapsed[0], collapsed[1]);

    TeleportBranch branch;
    branch.bits = bell.bits;
    branch.bell_label = bell.label;
    branch.probability = prob;
    branch.output = QubitState(collapsed[0], collapsed[1]);
    const Complex overlap =
        std::conj(psi[0]) * collapsed[0] + std::conj(psi[1]) * collapsed[1];
    branch.fidelity = std::norm(overlap);
    branches[k] = branch;
  }
  return branches;
}

TeleportBranch teleport(const QubitState& input, Rng& rng) {
  const std::array<TeleportBranch, 4> branches = teleport_branches(input);
  std::vector<double> probs;
  probs.reserve(4);
  for (const TeleportBranch& b : branches) probs.push_back(b.probability);
  return branches[rng.pick(probs)];
}

CVector superdense_encode(std::pair<int, int> bits) {
  require_bit(bits.first, "superdense_encode");
  require_bit(bits.second, "superdense_encode");
  const double r = 1.0 / std::sqrt(2.0);
  // Bell pair |00>+|11>, sender holds the first qubit.
  Complex amp[2][2] = {{r, 0.0}, {0.0, r}};
  if (bits.second)  // phase flip on the sender's qubit
    for (int b = 0; b < 2; ++b) amp[1][b] = -amp[1][b];
  if (bits.first)  // bit flip on the sender's qubit
    for (int b = 0; b < 2; ++b) std::swap(amp[0][b], amp[1][b]);
  return CVector{amp[0][0], amp[0][1], amp[1][0], amp[1][1]};
}

SuperdenseResult superdense_decode(const CVector& state) {
  if (state.size() != 4)
    throw input_error("superdense_decode: expected a two-qubit state (4 amplitudes)");
  if (std::abs(norm2(state) - 1.0) > 1e-8)
    throw input_error("superdense_decode: state must be normalized");
  SuperdenseResult best;
  double best_prob = -1.0;
  for (const BellState& bell : bell_basis()) {
    Complex overlap = 0.0;
    for (std::size_t i = 0; i < 4; ++i) overlap += std::conj(bell.amp[i]) * state[i];
    const double prob = std::norm(overlap);
    if (prob > best_prob) {
      best_prob = prob;
      best = SuperdenseResult{bell.bits, bell.label, prob};
    }
  }
  return best;
}

SuperdenseResult superdense(std::pair<int, int> bits) {
  return superdense_decode(superdense_encode(bits));
}

}  // namespace qic
