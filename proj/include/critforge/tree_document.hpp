#pragma once

#include <optional>
#include <string>

#include "critforge/arith_structure.hpp"
#include "critforge/graph.hpp"
#include "json.hpp"

namespace critforge {

/// On-disk graph description:
///   {"vertices": [...], "edges": [[u, v] or [u, v, m], ...],
///    "r": {id: "n"}, "d": {id: "n"}}
/// "vertices", "r" and "d" are optional. Values may be strings or integers.
struct TreeDocument {
  Graph graph;
  std::optional<VertexMap> r;
  std::optional<VertexMap> d;

  /// The structure given by r (and checked against d when present).
  /// Throws MissingVertexValue, DivisibilityViolation.
  ArithmeticalStructure structure() const;
};

/// Throws nlohmann::json::exception on malformed input and Error on graph
/// errors.
TreeDocument parse_document(const nlohmann::json& doc);
TreeDocument load_document(const std::string& path);

/// Canonical document: sorted vertices and edges, decimal-string values.
nlohmann::json to_json(const Graph& g,
                       const std::optional<ArithmeticalStructure>& s = {});

nlohmann::json values_json(const Graph& g, const VertexValues& values);

}  // namespace critforge
