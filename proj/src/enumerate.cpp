#include "critforge/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "critforge/errors.hpp"

namespace critforge {

namespace {

struct Search {
  const Tree& tree;
  std::int64_t bound;
  std::vector<std::size_t> order;
  std::vector<std::size_t> parent;
  std::vector<std::vector<std::size_t>> children;
  std::vector<std::int64_t> r;
  std::vector<std::vector<std::int64_t>> found;

  /// r(p) divides the sum of its neighbors once its last child is set.
  bool closes(std::size_t p) const {
    std::int64_t sum = 0;
    if (parent[p] != p) sum += r[parent[p]];
    for (std::size_t c : children[p]) sum += r[c];
    return sum % r[p] == 0;
  }

  bool admissible(std::size_t v) const {
    const std::size_t p = parent[v];
    if (tree.degree(v) == 1 && r[p] % r[v] != 0) return false;
    if (children[p].back() == v && !closes(p)) return false;
    return true;
  }

  void descend(std::size_t i) {
    if (i == order.size()) {
      std::int64_t g = 0;
      for (std::int64_t x : r) g = std::gcd(g, x);
      if (g == 1) found.push_back(r);
      return;
    }
    const std::size_t v = order[i];
    const std::size_t p = parent[v];
    if (tree.degree(v) == 1) {
      for (std::int64_t x = 1; x <= std::min(bound, r[p]); ++x) {
        if (r[p] % x != 0) continue;
        r[v] = x;
        if (admissible(v)) descend(i + 1);
      }
    } else if (children[p].back() == v) {
      std::int64_t partial = parent[p] != p ? r[parent[p]] : 0;
      for (std::size_t c : children[p]) {
        if (c != v) partial += r[c];
      }
      const std::int64_t m = r[p];
      std::int64_t first = ((-partial) % m + m) % m;
      if (first == 0) first = m;
      for (std::int64_t x = first; x <= bound; x += m) {
        r[v] = x;
        if (admissible(v)) descend(i + 1);
      }
    } else {
      for (std::int64_t x = 1; x <= bound; ++x) {
        r[v] = x;
        descend(i + 1);
      }
    }
    r[v] = 0;
  }
};

/// Primitive r-vectors in vertex order, sorted.
std::vector<std::vector<std::int64_t>> search_labels(
    const Tree& t, const EnumerationConfig& cfg) {
  if (cfg.r_bound < 1) {
    throw Error(ErrorKind::InvalidArgument, "r_bound must be at least 1");
  }
  if (cfg.vertex_cap > 12) {
    throw Error(ErrorKind::InvalidArgument, "vertex_cap is limited to 12");
  }
  if (t.vertex_count() > cfg.vertex_cap) {
    throw Error(ErrorKind::TreeTooLarge,
                std::to_string(t.vertex_count()) + " vertices exceed cap " +
                    std::to_string(cfg.vertex_cap));
  }
  const std::size_t n = t.vertex_count();
  if (n == 1) return {{1}};

  Search s{t, cfg.r_bound, {}, std::vector<std::size_t>(n, n),
           std::vector<std::vector<std::size_t>>(n),
           std::vector<std::int64_t>(n, 0), {}};
  const std::size_t root = t.leaves().front();
  s.order.push_back(root);
  s.parent[root] = root;
  for (std::size_t i = 0; i < s.order.size(); ++i) {
    const std::size_t v = s.order[i];
    for (const Neighbor& nb : t.neighbors(v)) {
      if (s.parent[nb.index] == n) {
        s.parent[nb.index] = v;
        s.children[v].push_back(nb.index);
        s.order.push_back(nb.index);
      }
    }
  }
  for (std::int64_t x = 1; x <= cfg.r_bound; ++x) {
    s.r[root] = x;
    s.descend(1);
  }
  std::sort(s.found.begin(), s.found.end());
  return std::move(s.found);
}

}  // namespace

std::vector<ArithmeticalStructure> enumerate_structures(
    const Tree& t, const EnumerationConfig& cfg) {
  const auto found = search_labels(t, cfg);
  if (t.vertex_count() == 1) return {ArithmeticalStructure{{0}, {1}}};
  std::vector<ArithmeticalStructure> out;
  out.reserve(found.size());
  for (const auto& labels : found) {
    VertexValues r;
    r.reserve(labels.size());
    for (std::int64_t x : labels) r.emplace_back(static_cast<long>(x));
    out.push_back(structure_from_r(t.graph(), std::move(r)));
  }
  return out;
}

std::size_t count_structures(const Tree& t, const EnumerationConfig& cfg) {
  return search_labels(t, cfg).size();
}

bool saturated(const Tree& t, const EnumerationConfig& cfg) {
  EnumerationConfig doubled = cfg;
  doubled.r_bound *= 2;
  return count_structures(t, cfg) == count_structures(t, doubled);
}

}  // namespace critforge
