#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace critforge {

using VertexId = std::string;

struct Edge {
  VertexId u;
  VertexId v;
  std::int64_t multiplicity = 1;
};

struct Neighbor {
  std::size_t index;
  std::int64_t multiplicity;
};

/// Finite connected loopless multigraph.
///
/// Vertices are kept in lexicographic order of their identifiers; that order
/// is the row/column order of every matrix derived from the graph. Instances
/// are immutable once built.
class Graph {
 public:
  /// Builds from an edge list; the vertex set is the set of edge endpoints.
  /// Parallel entries for the same pair accumulate multiplicity.
  static Graph build(std::span<const Edge> edges);

  /// Builds from an explicit vertex list plus edges, which allows a single
  /// isolated vertex as the one-vertex graph.
  static Graph build(std::span<const VertexId> vertices,
                     std::span<const Edge> edges);

  std::size_t vertex_count() const { return ids_.size(); }
  /// Number of edges counted with multiplicity.
  std::int64_t edge_count() const { return edge_count_; }

  const std::vector<VertexId>& vertices() const { return ids_; }
  const VertexId& id(std::size_t index) const { return ids_.at(index); }

  std::optional<std::size_t> find(const VertexId& id) const;
  bool contains(const VertexId& id) const { return find(id).has_value(); }
  /// Throws UnknownVertex.
  std::size_t index_of(const VertexId& id) const;

  std::span<const Neighbor> neighbors(std::size_t index) const {
    return adjacency_.at(index);
  }
  std::int64_t multiplicity(std::size_t a, std::size_t b) const;
  /// Degree counted with multiplicity.
  std::int64_t degree(std::size_t index) const;

  /// Edges with u < v, sorted.
  std::vector<Edge> edges() const;

  bool is_tree() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  Graph() = default;

  std::vector<VertexId> ids_;
  std::unordered_map<VertexId, std::size_t> index_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::int64_t edge_count_ = 0;
};

/// A Graph that is acyclic with every multiplicity equal to 1.
class Tree {
 public:
  /// Throws NotATree.
  explicit Tree(Graph graph);

  static Tree from_edges(
      std::span<const std::pair<VertexId, VertexId>> edges);

  const Graph& graph() const { return graph_; }

  std::size_t vertex_count() const { return graph_.vertex_count(); }
  std::size_t edge_count() const { return graph_.vertex_count() - 1; }
  const std::vector<VertexId>& vertices() const { return graph_.vertices(); }
  const VertexId& id(std::size_t index) const { return graph_.id(index); }
  std::size_t index_of(const VertexId& id) const {
    return graph_.index_of(id);
  }
  std::span<const Neighbor> neighbors(std::size_t index) const {
    return graph_.neighbors(index);
  }
  std::size_t degree(std::size_t index) const {
    return graph_.neighbors(index).size();
  }
  std::size_t degree(const VertexId& v) const { return degree(index_of(v)); }

  std::vector<std::size_t> leaves() const;
  std::size_t leaf_count() const { return leaves().size(); }
  /// Vertices of degree at least 3.
  std::vector<std::size_t> branch_vertices() const;
  bool is_path() const { return branch_vertices().empty(); }
  bool is_starlike() const { return branch_vertices().size() == 1; }

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.graph_ == b.graph_;
  }

 private:
  Graph graph_;
};

/// Maximal branch-free path from the neighbor of a branch vertex out to a
/// leaf. The attachment (branch) vertex is recorded separately and is not part
/// of `vertices`, which runs from the attachment side to the leaf.
struct Tentacle {
  VertexId attachment;
  std::vector<VertexId> vertices;

  std::size_t length() const { return vertices.size(); }
  const VertexId& leaf() const { return vertices.back(); }
};

struct TentacleSet {
  /// Set when the tree has no branch vertex; `tentacles` is then empty.
  bool is_path = false;
  std::vector<Tentacle> tentacles;
};

/// Tentacles ordered by leaf identifier.
TentacleSet tentacles(const Tree& tree);

struct WedgeResult {
  Graph graph;
  /// Identifier of every vertex of each input inside the wedge.
  std::map<VertexId, VertexId> left_ids;
  std::map<VertexId, VertexId> right_ids;
};

/// Identifies x in g1 with y in g2. The merged vertex keeps the identifier x;
/// vertices of g2 whose identifier is already taken get primes appended.
WedgeResult wedge(const Graph& g1, const VertexId& x, const Graph& g2,
                  const VertexId& y);

/// Replaces the edge {u, v} by a path with `parts` edges. Fresh vertices are
/// named "u~v.1", "u~v.2", ... (primed if taken). Throws UnknownEdge.
Tree subdivide(const Tree& tree, const VertexId& u, const VertexId& v,
               int parts);

/// True when `candidate` is a subdivision of `original` that keeps the
/// original identifiers: every original vertex is present, every added vertex
/// has degree 2, and suppressing the added vertices gives back exactly the
/// original edge set.
bool is_subdivision_of(const Tree& candidate, const Tree& original);

/// `base` if unused in `taken`, else `base` with enough primes appended.
VertexId fresh_id(const Graph& taken, VertexId base);

}  // namespace critforge
