#include "critforge/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "critforge/errors.hpp"

namespace critforge {

namespace {

bool connected(const std::vector<std::vector<Neighbor>>& adjacency) {
  if (adjacency.empty()) return true;
  std::vector<bool> seen(adjacency.size(), false);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const std::size_t v = frontier.front();
    frontier.pop();
    for (const Neighbor& n : adjacency[v]) {
      if (!seen[n.index]) {
        seen[n.index] = true;
        ++reached;
        frontier.push(n.index);
      }
    }
  }
  return reached == adjacency.size();
}

}  // namespace

Graph Graph::build(std::span<const Edge> edges) {
  return build(std::span<const VertexId>{}, edges);
}

Graph Graph::build(std::span<const VertexId> vertices,
                   std::span<const Edge> edges) {
  std::set<VertexId> ids(vertices.begin(), vertices.end());
  std::map<std::pair<VertexId, VertexId>, std::int64_t> weights;
  for (const Edge& e : edges) {
    if (e.u == e.v) throw Error(ErrorKind::LoopEdge, "self-edge at " + e.u);
    if (e.multiplicity < 1) {
      throw Error(ErrorKind::InvalidArgument,
                  "edge " + e.u + "-" + e.v + " has multiplicity < 1");
    }
    ids.insert(e.u);
    ids.insert(e.v);
    auto key = std::minmax(e.u, e.v);
    weights[{key.first, key.second}] += e.multiplicity;
  }
  if (ids.empty()) throw Error(ErrorKind::EmptyGraph, "no vertices");

  Graph g;
  g.ids_.assign(ids.begin(), ids.end());
  for (std::size_t i = 0; i < g.ids_.size(); ++i) g.index_[g.ids_[i]] = i;
  g.adjacency_.resize(g.ids_.size());
  for (const auto& [key, weight] : weights) {
    const std::size_t a = g.index_.at(key.first);
    const std::size_t b = g.index_.at(key.second);
    g.adjacency_[a].push_back({b, weight});
    g.adjacency_[b].push_back({a, weight});
    g.edge_count_ += weight;
  }
  for (auto& row : g.adjacency_) {
    std::sort(row.begin(), row.end(),
              [](const Neighbor& x, const Neighbor& y) {
                return x.index < y.index;
              });
  }
  if (!connected(g.adjacency_)) {
    throw Error(ErrorKind::DisconnectedGraph, "graph is not connected");
  }
  return g;
}

std::optional<std::size_t> Graph::find(const VertexId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Graph::index_of(const VertexId& id) const {
  auto found = find(id);
  if (!found) throw Error(ErrorKind::UnknownVertex, "no vertex '" + id + "'");
  return *found;
}

std::int64_t Graph::multiplicity(std::size_t a, std::size_t b) const {
  for (const Neighbor& n : adjacency_.at(a)) {
    if (n.index == b) return n.multiplicity;
  }
  return 0;
}

std::int64_t Graph::degree(std::size_t index) const {
  std::int64_t total = 0;
  for (const Neighbor& n : adjacency_.at(index)) total += n.multiplicity;
  return total;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t a = 0; a < ids_.size(); ++a) {
    for (const Neighbor& n : adjacency_[a]) {
      if (a < n.index) out.push_back({ids_[a], ids_[n.index], n.multiplicity});
    }
  }
  return out;
}

bool Graph::is_tree() const {
  if (edge_count_ != static_cast<std::int64_t>(ids_.size()) - 1) return false;
  for (const auto& row : adjacency_) {
    for (const Neighbor& n : row) {
      if (n.multiplicity != 1) return false;
    }
  }
  return true;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.ids_ != b.ids_) return false;
  for (std::size_t i = 0; i < a.adjacency_.size(); ++i) {
    const auto& x = a.adjacency_[i];
    const auto& y = b.adjacency_[i];
    if (x.size() != y.size()) return false;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j].index != y[j].index || x[j].multiplicity != y[j].multiplicity) {
        return false;
      }
    }
  }
  return true;
}

Tree::Tree(Graph graph) : graph_(std::move(graph)) {
  if (!graph_.is_tree()) {
    throw Error(ErrorKind::NotATree,
                "graph has " + std::to_string(graph_.edge_count()) +
                    " edges on " + std::to_string(graph_.vertex_count()) +
                    " vertices or a multiple edge");
  }
}

Tree Tree::from_edges(std::span<const std::pair<VertexId, VertexId>> edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (const auto& [u, v] : edges) list.push_back({u, v, 1});
  return Tree(Graph::build(list));
}

std::vector<std::size_t> Tree::leaves() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    if (degree(v) == 1) out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> Tree::branch_vertices() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    if (degree(v) >= 3) out.push_back(v);
  }
  return out;
}

TentacleSet tentacles(const Tree& tree) {
  TentacleSet out;
  if (tree.is_path()) {
    out.is_path = true;
    return out;
  }
  for (std::size_t leaf : tree.leaves()) {
    std::vector<std::size_t> chain{leaf};
    std::size_t previous = leaf;
    std::size_t current = tree.neighbors(leaf)[0].index;
    while (tree.degree(current) == 2) {
      chain.push_back(current);
      const auto nbrs = tree.neighbors(current);
      const std::size_t next =
          nbrs[0].index == previous ? nbrs[1].index : nbrs[0].index;
      previous = current;
      current = next;
    }
    Tentacle t;
    t.attachment = tree.id(current);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      t.vertices.push_back(tree.id(*it));
    }
    out.tentacles.push_back(std::move(t));
  }
  return out;
}

VertexId fresh_id(const Graph& taken, VertexId base) {
  while (taken.contains(base)) base += '\'';
  return base;
}

WedgeResult wedge(const Graph& g1, const VertexId& x, const Graph& g2,
                  const VertexId& y) {
  g1.index_of(x);
  g2.index_of(y);

  std::set<VertexId> used(g1.vertices().begin(), g1.vertices().end());
  WedgeResult result{g1, {}, {}};
  for (const VertexId& v : g1.vertices()) result.left_ids[v] = v;
  for (const VertexId& v : g2.vertices()) {
    if (v == y) {
      result.right_ids[v] = x;
      continue;
    }
    VertexId name = v;
    while (used.contains(name)) name += '\'';
    used.insert(name);
    result.right_ids[v] = name;
  }

  std::vector<Edge> edges = g1.edges();
  for (const Edge& e : g2.edges()) {
    edges.push_back({result.right_ids.at(e.u), result.right_ids.at(e.v),
                     e.multiplicity});
  }
  std::vector<VertexId> vertices(used.begin(), used.end());
  result.graph = Graph::build(vertices, edges);
  return result;
}

Tree subdivide(const Tree& tree, const VertexId& u, const VertexId& v,
               int parts) {
  if (parts < 1) {
    throw Error(ErrorKind::InvalidArgument, "parts must be at least 1");
  }
  const auto a = tree.graph().find(u);
  const auto b = tree.graph().find(v);
  if (!a || !b || tree.graph().multiplicity(*a, *b) == 0) {
    throw Error(ErrorKind::UnknownEdge, "no edge " + u + "-" + v);
  }
  if (parts == 1) return tree;

  std::set<VertexId> used(tree.vertices().begin(), tree.vertices().end());
  std::vector<VertexId> chain{u};
  for (int i = 1; i < parts; ++i) {
    VertexId name = u + "~" + v + "." + std::to_string(i);
    while (used.contains(name)) name += '\'';
    used.insert(name);
    chain.push_back(name);
  }
  chain.push_back(v);

  std::vector<Edge> edges;
  for (const Edge& e : tree.graph().edges()) {
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) continue;
    edges.push_back(e);
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    edges.push_back({chain[i], chain[i + 1], 1});
  }
  return Tree(Graph::build(edges));
}

bool is_subdivision_of(const Tree& candidate, const Tree& original) {
  const Graph& big = candidate.graph();
  for (const VertexId& v : original.vertices()) {
    if (!big.contains(v)) return false;
  }
  auto is_original = [&](std::size_t i) {
    return original.graph().contains(big.id(i));
  };
  for (std::size_t i = 0; i < big.vertex_count(); ++i) {
    if (!is_original(i) && candidate.degree(i) != 2) return false;
  }

  // Walk every edge leaving an original vertex through added vertices.
  std::set<std::pair<VertexId, VertexId>> contracted;
  for (std::size_t start = 0; start < big.vertex_count(); ++start) {
    if (!is_original(start)) continue;
    for (const Neighbor& n : big.neighbors(start)) {
      std::size_t previous = start;
      std::size_t current = n.index;
      while (!is_original(current)) {
        const auto nbrs = big.neighbors(current);
        const std::size_t next =
            nbrs[0].index == previous ? nbrs[1].index : nbrs[0].index;
        previous = current;
        current = next;
      }
      auto key = std::minmax(big.id(start), big.id(current));
      contracted.insert({key.first, key.second});
    }
  }
  std::set<std::pair<VertexId, VertexId>> expected;
  for (const Edge& e : original.graph().edges()) expected.insert({e.u, e.v});
  return contracted == expected;
}

}  // namespace critforge
