// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qft-infocalc Authors
#include "json_io.hpp"

#include <fstream>

#include "qic/errors.hpp"

namespace qic::cli {

namespace {

using nlohmann::json;

const json& require_field(const json& doc, const char* field, const std::string& ctx) {
  auto it = doc.find(field);
  if (it == doc.end()) throw input_error(ctx + ": missing field '" + field + "'");
  return *it;
}

Complex parse_complex(const json& entry, const std::string& ctx) {
  if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
      !entry[1].is_number())
    throw input_error(ctx + ": expected a [re, im] number pair");
  return Complex(entry[0].get<double>(), entry[1].get<double>());
}

std::vector<std::size_t> parse_dims(const json& doc, const std::string& ctx) {
  const json& dims = require_field(doc, "dims", ctx);
  if (!dims.is_array() || dims.empty())
    throw input_error(ctx + ": field 'dims' must be a non-empty array");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (!dims[i].is_number_unsigned() || dims[i].get<std::uint64_t>() == 0)
      throw input_error(ctx + ": field 'dims' entry " + std::to_string(i) +
                        " must be a positive integer");
    out.push_back(dims[i].get<std::size_t>());
  }
  return out;
}

CVector parse_amplitudes(const json& amps, const std::string& ctx) {
  if (!amps.is_array() || amps.empty())
    throw input_error(ctx + ": field 'amplitudes' must be a non-empty array");
  CVector v;
  v.reserve(amps.size());
  for (std::size_t i = 0; i < amps.size(); ++i)
    v.push_back(parse_complex(amps[i], ctx + ": field 'amplitudes' entry " +
                                           std::to_string(i)));
  return v;
}

}  // namespace

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw input_error("file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!doc.is_object()) throw input_error("file '" + path + "': expected a JSON object");
  return doc;
}

DensityMatrix parse_state_density(const nlohmann::json& doc) {
  const std::string ctx = "state document";
  if (doc.contains("amplitudes")) {
    const CVector v = parse_amplitudes(doc["amplitudes"], ctx);
    const std::vector<std::size_t> dims = parse_dims(doc, ctx);
    std::size_t expected = 1;
    for (std::size_t d : dims) expected *= d;
    if (v.size() != expected)
      throw input_error(ctx + ": field 'amplitudes' has " + std::to_string(v.size()) +
                        " entries but field 'dims' implies " +
                        std::to_string(expected));
    return density_from_statevector(v, dims);
  }
  if (doc.contains("matrix")) {
    const json& rows = doc["matrix"];
    if (!rows.is_array() || rows.empty())
      throw input_error(ctx + ": field 'matrix' must be a non-empty array of rows");
    const std::size_t n = rows.size();
    ComplexMatrix m = ComplexMatrix::zero(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!rows[i].is_array() || rows[i].size() != n)
        throw input_error(ctx + ": field 'matrix' row " + std::to_string(i) +
                          " must have " + std::to_string(n) + " entries");
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = parse_complex(rows[i][j], ctx + ": field 'matrix' entry (" +
                                                std::to_string(i) + "," +
                                                std::to_string(j) + ")");
    }
    return DensityMatrix(std::move(m), parse_dims(doc, ctx));
  }
  throw input_error(ctx + ": expected field 'amplitudes' or 'matrix'");
}

QubitState parse_qubit(const nlohmann::json& doc) {
  const std::string ctx = "qubit state document";
  const CVector v = parse_amplitudes(require_field(doc, "amplitudes", ctx), ctx);
  if (v.size() != 2)
    throw input_error(ctx + ": field 'amplitudes' must have exactly 2 entries");
  return QubitState(v[0], v[1]);
}

InfoDiagram parse_diagram(const nlohmann::json& doc) {
  const std::string ctx = "diagram document";
  InfoDiagram d;
  d.name = doc.value("name", std::string("diagram"));

  const json& vertices = require_field(doc, "vertices", ctx);
  if (!vertices.is_array())
    throw input_error(ctx + ": field 'vertices' must be an array");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string vctx = ctx + ": vertex " + std::to_string(i);
    const json& v = vertices[i];
    if (!v.is_object()) throw input_error(vctx + ": expected an object");
    Vertex vertex;
    vertex.id = require_field(v, "id", vctx).get<std::string>();
    vertex.kind = vertex_kind_from_name(require_field(v, "kind", vctx).get<std::string>());
    d.vertices.push_back(std::move(vertex));
  }

  const json& edges = require_field(doc, "edges", ctx);
  if (!edges.is_array()) throw input_error(ctx + ": field 'edges' must be an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string ectx = ctx + ": edge " + std::to_string(i);
    const json& e = edges[i];
    if (!e.is_object()) throw input_error(ectx + ": expected an object");
    Edge edge;
    edge.from = require_field(e, "from", ectx).get<std::string>();
    edge.to = require_field(e, "to", ectx).get<std::string>();
    edge.species = species_from_name(require_field(e, "species", ectx).get<std::string>());
    if (e.contains("multiplicity")) {
      if (!e["multiplicity"].is_number_unsigned() ||
          e["multiplicity"].get<std::uint64_t>() == 0)
        throw input_error(ectx + ": field 'multiplicity' must be a positive integer");
      edge.multiplicity = e["multiplicity"].get<std::size_t>();
    }
    d.edges.push_back(std::move(edge));
  }
  validate_diagram(d);
  return d;
}

nlohmann::json amplitudes_json(const CVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const Complex& c : v) out.push_back({c.real(), c.imag()});
  return out;
}

nlohmann::json density_json(const DensityMatrix& rho) {
  nlohmann::json matrix = nlohmann::json::array();
  const ComplexMatrix& m = rho.matrix();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    matrix.push_back(std::move(row));
  }
  nlohmann::json dims = nlohmann::json::array();
  for (std::size_t d : rho.dims()) dims.push_back(d);
  return nlohmann::json{{"dims", std::move(dims)}, {"matrix", std::move(matrix)}};
}

}  // namespace qic::cli
