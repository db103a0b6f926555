#include "critforge/tree_document.hpp"

#include <fstream>

#include "critforge/errors.hpp"

namespace critforge {

namespace {

std::string as_id(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw nlohmann::json::type_error::create(302, "vertex id must be a string",
                                           &v);
}

Integer as_integer(const nlohmann::json& v) {
  if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    Integer out;
    if (out.set_str(v.get<std::string>(), 10) != 0) {
      throw Error(ErrorKind::InvalidArgument,
                  "not an integer: " + v.get<std::string>());
    }
    return out;
  }
  throw nlohmann::json::type_error::create(302, "value must be an integer",
                                           &v);
}

std::optional<VertexMap> read_map(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) return std::nullopt;
  VertexMap out;
  for (const auto& [k, v] : doc.at(key).items()) out[k] = as_integer(v);
  return out;
}

}  // namespace

ArithmeticalStructure TreeDocument::structure() const {
  if (!r) {
    throw Error(ErrorKind::MissingVertexValue, "document has no r values");
  }
  ArithmeticalStructure s = structure_from_r(graph, *r);
  if (d) {
    const VertexValues given = values_from_map(graph, *d);
    const ValidationReport report = validate(graph, given, s.r);
    if (!report) {
      throw Error(ErrorKind::DivisibilityViolation, report.diagnostic);
    }
  }
  return s;
}

TreeDocument parse_document(const nlohmann::json& doc) {
  std::vector<VertexId> vertices;
  if (doc.contains("vertices")) {
    for (const auto& v : doc.at("vertices")) vertices.push_back(as_id(v));
  }
  std::vector<Edge> edges;
  for (const auto& e : doc.at("edges")) {
    if (!e.is_array() || e.size() < 2 || e.size() > 3) {
      throw Error(ErrorKind::InvalidArgument,
                  "edge must be [u, v] or [u, v, multiplicity]: " + e.dump());
    }
    Edge edge{as_id(e[0]), as_id(e[1]), 1};
    if (e.size() == 3) edge.multiplicity = e[2].get<std::int64_t>();
    edges.push_back(std::move(edge));
  }
  return {Graph::build(vertices, edges), read_map(doc, "r"),
          read_map(doc, "d")};
}

TreeDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_document(nlohmann::json::parse(in));
}

nlohmann::json values_json(const Graph& g, const VertexValues& values) {
  nlohmann::json out = nlohmann::json::object();
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    out[g.id(i)] = values.at(i).get_str();
  }
  return out;
}

nlohmann::json to_json(const Graph& g,
                       const std::optional<ArithmeticalStructure>& s) {
  nlohmann::json out;
  out["vertices"] = g.vertices();
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) {
    if (e.multiplicity == 1) {
      edges.push_back({e.u, e.v});
    } else {
      edges.push_back({e.u, e.v, e.multiplicity});
    }
  }
  out["edges"] = std::move(edges);
  if (s) {
    out["r"] = values_json(g, s->r);
    out["d"] = values_json(g, s->d);
  }
  return out;
}

}  // namespace critforge
