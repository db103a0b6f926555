#include "critforge/tree_decomp.hpp"

#include <algorithm>
#include <set>

#include "critforge/errors.hpp"

namespace critforge {

namespace {

/// Follows degree-2 vertices away from `from` starting at `next`; returns the
/// first vertex of degree != 2.
std::size_t walk_to_end(const Tree& t, std::size_t from, std::size_t next) {
  while (t.degree(next) == 2) {
    const auto nbrs = t.neighbors(next);
    const std::size_t ahead =
        nbrs[0].index == from ? nbrs[1].index : nbrs[0].index;
    from = next;
    next = ahead;
  }
  return next;
}

/// Vertices reachable from `start` without passing through `blocked`.
std::vector<std::size_t> side(const Tree& t, std::size_t blocked,
                              std::size_t start) {
  std::vector<std::size_t> out{start};
  std::vector<std::size_t> stack{start};
  std::vector<bool> seen(t.vertex_count(), false);
  seen[blocked] = seen[start] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (const Neighbor& n : t.neighbors(v)) {
      if (!seen[n.index]) {
        seen[n.index] = true;
        out.push_back(n.index);
        stack.push_back(n.index);
      }
    }
  }
  return out;
}

Tree induced(const Tree& t, const std::vector<std::size_t>& keep) {
  std::set<std::size_t> inside(keep.begin(), keep.end());
  std::vector<Edge> edges;
  for (std::size_t v : keep) {
    for (const Neighbor& n : t.neighbors(v)) {
      if (v < n.index && inside.contains(n.index)) {
        edges.push_back({t.id(v), t.id(n.index), 1});
      }
    }
  }
  std::vector<VertexId> ids;
  for (std::size_t v : keep) ids.push_back(t.id(v));
  return Tree(Graph::build(ids, edges));
}

}  // namespace

std::optional<StarlikeSplitting> starlike_split(const Tree& t,
                                                SplitOrder order) {
  const auto branches = t.branch_vertices();
  if (branches.size() < 2) return std::nullopt;

  std::optional<std::size_t> center;
  std::size_t toward = 0;
  for (std::size_t c : branches) {
    std::size_t inner = 0;
    std::size_t direction = 0;
    for (const Neighbor& n : t.neighbors(c)) {
      if (t.degree(walk_to_end(t, c, n.index)) != 1) {
        ++inner;
        direction = n.index;
      }
    }
    if (inner != 1) continue;
    // Vertex indices follow identifier order.
    if (!center || order == SplitOrder::HighestId) {
      center = c;
      toward = direction;
      if (order == SplitOrder::LowestId) break;
    }
  }
  if (!center) {
    throw Error(ErrorKind::InternalInconsistency,
                "no peripheral branch vertex found");
  }

  const std::size_t c = *center;
  std::vector<std::size_t> rest = side(t, c, toward);
  std::set<std::size_t> in_rest(rest.begin(), rest.end());
  std::vector<std::size_t> kept;
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    if (!in_rest.contains(v)) kept.push_back(v);
  }

  StarlikeSplitting s{induced(t, kept), induced(t, rest), t.id(c), {},
                      t.id(toward), t.degree(toward) == 2};
  const VertexId leaf = fresh_id(t.graph(), t.id(toward) + "@");
  std::vector<Edge> edges = s.piece.graph().edges();
  edges.push_back({t.id(c), leaf, 1});
  s.piece = Tree(Graph::build(edges));
  s.merge_leaf = leaf;
  return s;
}

std::size_t StarlikeDecomposition::excess() const {
  std::size_t total = 0;
  for (const auto& p : pieces) total += p.leaves() - 2;
  return total;
}

Tree StarlikeDecomposition::recompose() const {
  if (pieces.empty()) {
    throw Error(ErrorKind::InvalidArgument, "empty decomposition");
  }
  Graph acc = pieces.back().tree.graph();
  for (std::size_t i = pieces.size() - 1; i-- > 0;) {
    const auto& p = pieces[i];
    acc = wedge(acc, *p.attach, p.tree.graph(), *p.merge_leaf).graph;
  }
  return Tree(std::move(acc));
}

StarlikeDecomposition starlike_decomposition(const Tree& t,
                                             SplitOrder order) {
  if (t.vertex_count() < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "starlike decomposition needs at least two vertices");
  }
  StarlikeDecomposition out;
  Tree current = t;
  while (auto split = starlike_split(current, order)) {
    out.pieces.push_back({split->piece, split->center, split->merge_leaf,
                          split->attach, split->regular});
    if (!split->regular) ++out.iota;
    current = split->remainder;
  }
  DecompositionPiece last{current, std::nullopt, std::nullopt, std::nullopt,
                          true};
  const auto branches = current.branch_vertices();
  if (!branches.empty()) last.center = current.id(branches.front());
  out.pieces.push_back(std::move(last));
  return out;
}

std::size_t iota(const Tree& t) { return starlike_decomposition(t).iota; }

std::size_t two_matching_number(const Tree& t) {
  const std::size_t n = t.vertex_count();
  if (n < 2) return 0;
  const std::size_t root = t.leaves().front();

  std::vector<std::size_t> order{root};
  std::vector<std::size_t> parent(n, n);
  parent[root] = root;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const Neighbor& nb : t.neighbors(order[i])) {
      if (parent[nb.index] == n) {
        parent[nb.index] = order[i];
        order.push_back(nb.index);
      }
    }
  }

  // free_[v]: best in v's subtree with two slots at v; taken[v]: one slot.
  std::vector<std::size_t> free_(n, 0), taken(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t v = *it;
    std::size_t base = 0;
    std::size_t best = 0, second = 0;
    for (const Neighbor& nb : t.neighbors(v)) {
      const std::size_t c = nb.index;
      if (parent[c] != v) continue;
      base += free_[c];
      const std::size_t gain = 1 + taken[c] - free_[c];
      if (gain > best) {
        second = best;
        best = gain;
      } else if (gain > second) {
        second = gain;
      }
    }
    free_[v] = base + best + second;
    taken[v] = base + best;
  }
  return free_[root];
}

std::size_t invariant_factor_bound(const Tree& t) {
  const std::size_t leaves = t.leaf_count();
  const std::size_t splits = iota(t);
  const std::size_t by_matching = t.edge_count() - two_matching_number(t);
  if (leaves < 2 + splits || leaves - 2 - splits != by_matching) {
    throw Error(ErrorKind::InternalInconsistency,
                "leaf bound and 2-matching bound disagree (" +
                    std::to_string(leaves) + " leaves, iota " +
                    std::to_string(splits) + ", |E|-nu2 " +
                    std::to_string(by_matching) + ")");
  }
  return by_matching;
}

CyclicClass cyclic_classification(const Tree& t) {
  const auto branches = t.branch_vertices();
  if (branches.empty()) return CyclicClass::AllTrivial;
  for (std::size_t v : branches) {
    if (t.degree(v) >= 4) return CyclicClass::AdmitsNoncyclic;
  }
  for (std::size_t i = 0; i < branches.size(); ++i) {
    for (std::size_t j = i + 1; j < branches.size(); ++j) {
      if (t.graph().multiplicity(branches[i], branches[j]) == 0) {
        return CyclicClass::AdmitsNoncyclic;
      }
    }
  }
  return CyclicClass::AllCyclic;
}

const char* to_string(CyclicClass c) {
  switch (c) {
    case CyclicClass::AllTrivial:
      return "all_trivial";
    case CyclicClass::AllCyclic:
      return "all_cyclic";
    case CyclicClass::AdmitsNoncyclic:
      return "admits_noncyclic";
  }
  return "unknown";
}

}  // namespace critforge
