#include "critforge/construct.hpp"

#include <optional>
#include <algorithm>
#include <set>

#include "critforge/errors.hpp"
#include "critforge/merge_star.hpp"
#include "critforge/tree_decomp.hpp"

namespace critforge {

namespace {

Integer negated_mod(const Integer& x, const Integer& m) {
  Integer out;
  mpz_fdiv_r(out.get_mpz_t(), Integer(-x).get_mpz_t(), m.get_mpz_t());
  return out;
}

class NameSource {
 public:
  explicit NameSource(const std::vector<VertexId>& taken)
      : used_(taken.begin(), taken.end()) {}

  void reserve(const VertexId& v) { used_.insert(v); }

  VertexId next(const VertexId& base) {
    VertexId name;
    do {
      name = base + "#" + std::to_string(++counter_);
    } while (used_.contains(name));
    used_.insert(name);
    return name;
  }

 private:
  std::set<VertexId> used_;
  std::size_t counter_ = 0;
};

struct Labelled {
  Tree tree;
  std::map<VertexId, Integer> r;
};

Tree subdivide_branch_edge(const Tree& t) {
  const std::size_t before = iota(t);
  std::optional<Tree> fallback;
  for (const Edge& e : t.graph().edges()) {
    if (t.degree(e.u) < 3 || t.degree(e.v) < 3) continue;
    Tree candidate = subdivide(t, e.u, e.v, 2);
    if (iota(candidate) + 1 == before) return candidate;
    if (!fallback) fallback = std::move(candidate);
  }
  if (!fallback) {
    throw Error(ErrorKind::InternalInconsistency,
                "no edge joins two branch vertices while iota = " +
                    std::to_string(before));
  }
  return *fallback;
}

/// Places the broom values onto a starlike piece, lengthening tentacles with
/// constant r and inserting fresh vertices in front of the leaf when the tail
/// is longer than its tentacle.
Labelled lay_broom(const Tree& piece, const std::optional<VertexId>& merge_leaf,
                   const Broom& broom, NameSource& names) {
  const auto& br = broom.structure.r;
  auto r_of = [&](const VertexId& v) { return br[broom.tree.index_of(v)]; };

  std::vector<Tentacle> all = tentacles(piece).tentacles;
  std::vector<Tentacle> others;
  std::optional<Tentacle> merge;
  for (Tentacle& t : all) {
    if (merge_leaf && t.leaf() == *merge_leaf) {
      merge = std::move(t);
    } else {
      others.push_back(std::move(t));
    }
  }
  std::size_t home_at = 0;
  for (std::size_t i = 1; i < others.size(); ++i) {
    if (others[i].length() > others[home_at].length()) home_at = i;
  }
  const Tentacle tail_home = others[home_at];
  others.erase(others.begin() + static_cast<std::ptrdiff_t>(home_at));

  std::vector<VertexId> prongs = broom.prongs;
  Labelled out{piece, {}};
  out.r[piece.id(piece.branch_vertices().front())] = r_of(broom.center);
  if (merge) {
    for (const VertexId& v : merge->vertices) out.r[v] = r_of(prongs.back());
    prongs.pop_back();
  }
  if (prongs.size() != others.size()) {
    throw Error(ErrorKind::InternalInconsistency,
                "broom prongs do not match piece tentacles");
  }
  for (std::size_t i = 0; i < others.size(); ++i) {
    for (const VertexId& v : others[i].vertices) out.r[v] = r_of(prongs[i]);
  }

  std::vector<Integer> tail;
  for (const VertexId& v : broom.tail) tail.push_back(r_of(v));
  const auto& home = tail_home.vertices;
  if (home.size() >= tail.size()) {
    for (std::size_t j = 0; j < home.size(); ++j) {
      out.r[home[j]] = j < tail.size() ? tail[j] : tail.back();
    }
    return out;
  }

  for (std::size_t j = 0; j + 1 < home.size(); ++j) out.r[home[j]] = tail[j];
  const VertexId& before =
      home.size() >= 2 ? home[home.size() - 2] : tail_home.attachment;
  const VertexId& leaf = home.back();
  std::vector<VertexId> chain{before};
  for (std::size_t j = home.size() - 1; j + 1 < tail.size(); ++j) {
    const VertexId fresh = names.next(leaf);
    chain.push_back(fresh);
    out.r[fresh] = tail[j];
  }
  chain.push_back(leaf);
  out.r[leaf] = tail.back();

  std::vector<Edge> edges;
  for (const Edge& e : piece.graph().edges()) {
    if ((e.u == before && e.v == leaf) || (e.u == leaf && e.v == before)) {
      continue;
    }
    edges.push_back(e);
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    edges.push_back({chain[i], chain[i + 1], 1});
  }
  out.tree = Tree(Graph::build(edges));
  return out;
}

/// Splits the factor list over capacities, largest factor first into the
/// piece with the most room left.
std::vector<std::vector<Integer>> partition_factors(
    const AbelianGroup& target, std::vector<std::size_t> capacity) {
  std::vector<std::vector<Integer>> parts(capacity.size());
  const auto& factors = target.invariant_factors();
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < capacity.size(); ++i) {
      if (capacity[i] > capacity[best]) best = i;
    }
    if (capacity.empty() || capacity[best] == 0) {
      throw Error(ErrorKind::InternalInconsistency, "capacity exhausted");
    }
    --capacity[best];
    parts[best].insert(parts[best].begin(), *it);
  }
  return parts;
}

}  // namespace

Broom broom_with_group(const AbelianGroup& target, std::size_t m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "m must be at least 1");
  const auto& factors = target.invariant_factors();
  if (factors.size() > m) {
    throw Error(ErrorKind::TooManyFactors,
                target.to_string() + " has " + std::to_string(factors.size()) +
                    " invariant factors, more than " + std::to_string(m));
  }

  Broom b{Tree::from_edges(std::vector<std::pair<VertexId, VertexId>>{
              {"c", "p1"}}),
          {}, "c", {}, {}};
  for (std::size_t i = 1; i <= m + 1; ++i) {
    b.prongs.push_back("p" + std::to_string(i));
  }

  std::map<VertexId, Integer> r;
  if (target.is_trivial()) {
    for (const VertexId& p : b.prongs) r[p] = 1;
    b.tail.push_back("t1");
    r["c"] = r["t1"] = 1;
  } else {
    std::vector<Integer> alpha(m - factors.size(), 1);
    alpha.insert(alpha.end(), factors.begin(), factors.end());
    const Integer r0 = alpha.back() * alpha.back();
    r["c"] = r0;
    Integer prong_sum = 0;
    for (std::size_t i = 0; i < m; ++i) {
      r[b.prongs[i]] = r0 / alpha[i];
      prong_sum += r0 / alpha[i];
    }
    r[b.prongs[m]] = 1;
    prong_sum += 1;

    std::vector<Integer> tail{negated_mod(prong_sum, r0)};
    Integer before = r0;
    while (tail.back() >= 2) {
      Integer next = negated_mod(before, tail.back());
      before = tail.back();
      tail.push_back(next);
    }
    if (sgn(tail.back()) == 0) {
      throw Error(ErrorKind::InternalInconsistency,
                  "broom tail reached 0 before 1");
    }
    for (std::size_t j = 0; j < tail.size(); ++j) {
      const VertexId id = "t" + std::to_string(j + 1);
      b.tail.push_back(id);
      r[id] = tail[j];
    }
  }

  std::vector<Edge> edges;
  for (const VertexId& p : b.prongs) edges.push_back({"c", p, 1});
  VertexId previous = "c";
  for (const VertexId& t : b.tail) {
    edges.push_back({previous, t, 1});
    previous = t;
  }
  b.tree = Tree(Graph::build(edges));
  b.structure = structure_from_r(b.tree.graph(), r);
  return b;
}

Realization realize_on_subdivision(const Tree& t, const AbelianGroup& target,
                                   std::size_t beta) {
  const std::size_t splits = t.vertex_count() >= 2 ? iota(t) : 0;
  if (beta > splits) {
    throw Error(ErrorKind::BetaOutOfRange,
                "beta = " + std::to_string(beta) + " exceeds iota = " +
                    std::to_string(splits));
  }
  if (t.is_path()) {
    if (!target.is_trivial()) {
      throw Error(ErrorKind::PathWithNontrivialTarget,
                  "every structure on a path has trivial critical group");
    }
    return {t, laplacian_structure(t.graph())};
  }
  const std::size_t capacity = t.leaf_count() - 2 - beta;
  if (target.factor_count() > capacity) {
    throw Error(ErrorKind::TooManyFactors,
                target.to_string() + " needs " +
                    std::to_string(target.factor_count()) +
                    " invariant factors; at most " + std::to_string(capacity) +
                    " fit");
  }

  Tree current = t;
  while (iota(current) > beta) current = subdivide_branch_edge(current);

  const StarlikeDecomposition dec = starlike_decomposition(current);
  std::vector<std::size_t> room;
  for (const auto& p : dec.pieces) room.push_back(p.leaves() - 2);
  const auto parts = partition_factors(target, room);

  NameSource names(current.vertices());
  for (const auto& p : dec.pieces) {
    if (p.merge_leaf) names.reserve(*p.merge_leaf);
  }

  std::vector<std::pair<Tree, ArithmeticalStructure>> built;
  for (std::size_t i = 0; i < dec.pieces.size(); ++i) {
    const DecompositionPiece& piece = dec.pieces[i];
    if (parts[i].empty()) {
      built.emplace_back(piece.tree, laplacian_structure(piece.tree.graph()));
      continue;
    }
    const Broom broom =
        broom_with_group(AbelianGroup(parts[i]), piece.leaves() - 2);
    Labelled laid = lay_broom(piece.tree, piece.merge_leaf, broom, names);
    ArithmeticalStructure s = structure_from_r(laid.tree.graph(), laid.r);
    built.emplace_back(std::move(laid.tree), std::move(s));
  }

  Graph graph = built.back().first.graph();
  ArithmeticalStructure structure = built.back().second;
  for (std::size_t i = dec.pieces.size() - 1; i-- > 0;) {
    const DecompositionPiece& piece = dec.pieces[i];
    const auto& [piece_tree, piece_structure] = built[i];
    if (piece_structure.r[piece_tree.index_of(*piece.merge_leaf)] != 1) {
      throw Error(ErrorKind::InternalInconsistency,
                  "merge leaf does not carry r = 1");
    }
    MergedStructure m =
        merge_structures(graph, *piece.attach, structure, piece_tree.graph(),
                         *piece.merge_leaf, piece_structure);
    graph = std::move(m.graph);
    structure = std::move(m.structure);
  }

  Realization out{Tree(std::move(graph)), std::move(structure)};
  if (!is_subdivision_of(out.tree, t)) {
    throw Error(ErrorKind::InternalInconsistency,
                "constructed tree is not a subdivision of the input");
  }
  if (iota(out.tree) != beta) {
    throw Error(ErrorKind::InternalInconsistency,
                "constructed tree has the wrong iota");
  }
  const AbelianGroup got = critical_group(out.tree.graph(), out.structure);
  if (!(got == target)) {
    throw Error(ErrorKind::InternalInconsistency,
                "constructed critical group " + got.to_string() +
                    " differs from " + target.to_string());
  }
  return out;
}

Realization realize_group(const AbelianGroup& target) {
  if (target.is_trivial()) {
    Tree edge = Tree::from_edges(
        std::vector<std::pair<VertexId, VertexId>>{{"c", "p1"}});
    ArithmeticalStructure s = laplacian_structure(edge.graph());
    return {std::move(edge), std::move(s)};
  }
  Broom b = broom_with_group(
      target, std::max<std::size_t>(1, target.factor_count()));
  return {std::move(b.tree), std::move(b.structure)};
}

}  // namespace critforge
