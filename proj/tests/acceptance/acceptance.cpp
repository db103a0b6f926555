#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "catalog.hpp"
#include "critforge/chip_firing.hpp"
#include "critforge/construct.hpp"
#include "critforge/enumerate.hpp"
#include "critforge/merge_star.hpp"
#include "critforge/smith.hpp"
#include "critforge/tree_decomp.hpp"
#include "oracles.hpp"

using namespace critforge;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream note;

  /// Records a failed check; the first few are kept in the note.
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) note << "failed: ";
    else note << "; ";
    note << what;
    pass = false;
  }
};

struct Loaded {
  Graph graph;
  ArithmeticalStructure s;
};

Loaded load(const std::string& name) {
  const TreeDocument doc = testkit::fixture(name);
  return {doc.graph, doc.structure()};
}

std::string show(const AbelianGroup& g) { return g.to_string(); }

void four_cycle(Verdict& v) {
  const Loaded c4 = load("four_cycle.json");
  const Divisor delta{3, 1, -1, -2};
  v.require(validate(c4.graph, c4.s).valid, "validate");
  v.require(divisor_degree(delta, c4.s.r) == 0, "degree");
  v.require(fire(c4.graph, c4.s.d, delta, "2") == Divisor{4, -1, 0, -2}, "fire at 2");
  v.require(!equivalent(c4.graph, c4.s.d, delta, Divisor(4, 0)).has_value(), "not equivalent to 0");
  v.require(order_in_group(c4.graph, c4.s, delta) == 2, "order 2");
  if (v.pass) v.note << "fire(v2) = (4,-1,0,-2), order 2";
}

void star_merge(Verdict& v) {
  const Loaded left = load("star3.json");
  const Loaded right = load("star4.json");
  const Loaded expected = load("merged_stars.json");
  const MergeReport rep = check_merge_additivity(left.graph, "a0", left.s, right.graph, "b2", right.s);
  const MergedStructure m = merge_structures(left.graph, "a0", left.s, right.graph, "b2", right.s);
  v.require(rep.left == AbelianGroup{2}, "left group " + show(rep.left));
  v.require(rep.right == (AbelianGroup{2, 6}), "right group " + show(rep.right));
  v.require(m.graph == expected.graph && m.structure == expected.s, "merged r and d");
  v.require(rep.merged == (AbelianGroup{2, 2, 6}), "merged group " + show(rep.merged));
  v.require(rep.additive, "additivity flag");
  if (v.pass) v.note << "(2) + (2,6) -> (2,2,6), merged values match";
}

void broom(Verdict& v) {
  const Broom b = broom_with_group(AbelianGroup{3, 18}, 2);
  const std::vector<std::pair<VertexId, long>> expected{
      {"c", 324}, {"p1", 108}, {"p2", 18}, {"p3", 1}, {"t1", 197},
      {"t2", 70}, {"t3", 13}, {"t4", 8}, {"t5", 3}, {"t6", 1}};
  v.require(b.tree.vertex_count() == expected.size(), "vertex count");
  for (const auto& [id, r] : expected) {
    const auto at = b.tree.graph().find(id);
    v.require(at && b.structure.r[*at] == r, "r(" + id + ")");
  }
  v.require(critical_group(b.tree.graph(), b.structure) == (AbelianGroup{3, 18}), "group");
  v.require(tree_order_formula(b.tree, b.structure.r) == 54, "order formula");
  if (v.pass) v.note << "r = (324;108,18,1;197,70,13,8,3,1), K = (3,18), |K| = 54";
}

void starlike_example(Verdict& v) {
  const Loaded b = load("broom_3_18.json");
  const Tree t(b.graph);
  const StarlikeSummary sum = starlike_summary(t, b.s);
  v.require(sum.dstar == IntegerVector{324, 324, 18, 3}, "d*");
  const AbelianGroup k = starlike_critical_group(t, b.s);
  v.require(k == (AbelianGroup{3, 18}), "stripped group " + show(k));
  v.require(k == critical_group(b.graph, b.s), "agrees with SNF");
  if (v.pass) v.note << "d* = (324,324,18,3), K = (3,18) by both routes";
}

void many_leaf_invariants(Verdict& v) {
  const Tree t(testkit::fixture("twelve_leaf_tree.json").graph);
  const std::size_t nu = two_matching_number(t);
  v.require(t.vertex_count() == 22, "22 vertices");
  v.require(nu == 14, "nu2 = " + std::to_string(nu));
  v.require(iota(t) == 3, "iota");
  v.require(t.leaf_count() == 12, "leaves");
  v.require(invariant_factor_bound(t) == 7 && t.graph().edges().size() - nu == 7, "bound");
  if (v.pass) v.note << "nu2 = 14, iota = 3, leaves = 12, bound = 7 = 21 - 14";
}

void small_iota(Verdict& v) {
  const std::size_t a = iota(Tree(testkit::fixture("iota_one.json").graph));
  const std::size_t b = iota(Tree(testkit::fixture("iota_two.json").graph));
  v.require(a == 1, "iota(T1) = " + std::to_string(a));
  v.require(b == 2, "iota(T2) = " + std::to_string(b));
  if (v.pass) v.note << "iota = 1 and 2";
}

/// A vertex at 16k with a neighbor at 4k and a tentacle 11k, 6k, k.
bool has_four_pattern(const Tree& t, const VertexValues& r) {
  for (std::size_t c = 0; c < t.vertex_count(); ++c) {
    if (r[c] % 16 != 0) continue;
    const Integer k = r[c] / 16;
    bool prong = false;
    bool tail = false;
    for (const Neighbor& a : t.neighbors(c)) {
      if (r[a.index] == 4 * k) prong = true;
      if (r[a.index] != 11 * k || t.degree(a.index) != 2) continue;
      for (const Neighbor& b : t.neighbors(a.index)) {
        if (b.index == c || r[b.index] != 6 * k || t.degree(b.index) != 2) continue;
        for (const Neighbor& e : t.neighbors(b.index)) {
          if (e.index != a.index && r[e.index] == k) tail = true;
        }
      }
    }
    if (prong && tail) return true;
  }
  return false;
}

void end_to_end(Verdict& v) {
  const Tree t(testkit::fixture("twelve_leaf_tree.json").graph);
  const AbelianGroup target{4, 4, 4, 4, 4, 4, 4};
  const Realization out = realize_on_subdivision(t, target, 3);
  v.require(is_subdivision_of(out.tree, t), "contraction check");
  v.require(iota(out.tree) == 3, "iota");
  const AbelianGroup k = critical_group(out.tree.graph(), out.structure);
  v.require(k == target, "group " + show(k));
  v.require(has_four_pattern(out.tree, out.structure.r), "broom pattern (16;4,1;11,6,1)");
  if (v.pass) {
    v.note << out.tree.vertex_count() << "-vertex subdivision, iota 3, K = (4)^7, pattern present";
  }
}

/// A tree stops doubling once one count takes longer than this.
constexpr double kCountBudgetSeconds = 0.1;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void sweeps(Verdict& v) {
  std::size_t structures = 0;
  std::size_t violations = 0;
  std::size_t trees = 0;
  std::map<std::size_t, std::size_t> unsaturated_by_leaves;
  std::vector<std::pair<Tree, ArithmeticalStructure>> small;
  for (const Tree& t : testkit::trees_up_to(8)) {
    ++trees;
    std::int64_t bound = 16;
    std::size_t count = count_structures(t, {bound, 12});
    bool saturated = false;
    double last = 0;
    while (!saturated && last < kCountBudgetSeconds) {
      const auto start = std::chrono::steady_clock::now();
      const std::size_t next = count_structures(t, {bound * 2, 12});
      last = seconds_since(start);
      saturated = next == count;
      count = next;
      bound *= 2;
    }
    if (!saturated) ++unsaturated_by_leaves[t.leaf_count()];

    const std::size_t cap = invariant_factor_bound(t);
    const CyclicClass cls = cyclic_classification(t);
    for (const auto& s : enumerate_structures(t, {bound, 12})) {
      ++structures;
      const AbelianGroup k = critical_group(t.graph(), s);
      bool ok = k.order() == tree_order_formula(t, s.r);
      ok = ok && k.factor_count() <= cap;
      if (t.is_path()) ok = ok && k.is_trivial();
      if (cls == CyclicClass::AllCyclic) ok = ok && k.is_cyclic();
      if (t.is_starlike()) ok = ok && starlike_critical_group(t, s) == k;
      if (!ok) ++violations;
      if (t.vertex_count() <= 5 && small.size() < 4000) small.emplace_back(t, s);
    }
  }

  std::mt19937 rng(8);
  std::size_t merges = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const auto& [ta, sa] = small[rng() % small.size()];
    const auto& [tb, sb] = small[rng() % small.size()];
    const VertexId x = ta.graph().id(rng() % ta.vertex_count());
    const VertexId y = tb.graph().id(rng() % tb.vertex_count());
    const MergeReport rep = check_merge_additivity(ta.graph(), x, sa, tb.graph(), y, sb);
    if (!rep.order_identity || (rep.gcd == 1 && !rep.additive)) ++violations;
    ++merges;
  }

  std::size_t unsaturated = 0;
  for (const auto& [leaves, n] : unsaturated_by_leaves) unsaturated += n;
  v.require(violations == 0, std::to_string(violations) + " violations");
  std::ostringstream gaps;
  for (const auto& [leaves, n] : unsaturated_by_leaves) gaps << " " << n << "@" << leaves << "L";
  v.require(unsaturated == 0, std::to_string(unsaturated) + " of " + std::to_string(trees) +
                                  " trees not saturated within the count budget (trees@leaves:" +
                                  gaps.str() + ")");
  v.note << "; " << structures << " structures and " << merges << " merges checked, "
         << violations << " violations";
}

void matrix_oracles(Verdict& v) {
  std::size_t minors = 0;
  for (const char* name : {"four_cycle.json", "star3.json", "star4.json",
                           "iota_one.json", "iota_two.json", "broom_3_18.json", "merged_stars.json"}) {
    const TreeDocument doc = testkit::fixture(name);
    std::vector<IntegerMatrix> ms;
    const auto s = doc.r ? doc.structure() : laplacian_structure(doc.graph);
    ms.push_back(laplacian(doc.graph, s.d));
    if (doc.graph.edges().size() + 1 == doc.graph.vertex_count()) {
      const Tree t(doc.graph);
      if (t.is_starlike()) ms.push_back(reduce_to_lstar(t, s));
    }
    for (const IntegerMatrix& m : ms) {
      if (m.rows() > 5 || m.cols() > 5) continue;
      for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        v.require(determinantal_divisor(m, k) == testkit::minor_gcd(m, k),
                  std::string("D_k on ") + name);
        ++minors;
      }
    }
  }

  std::size_t pairs = 0;
  std::vector<std::pair<Graph, VertexValues>> graphs;
  for (const Tree& t : testkit::trees_up_to(5)) {
    for (const auto& s : enumerate_structures(t, {64, 12})) graphs.emplace_back(t.graph(), s.d);
  }
  const Loaded c4 = load("four_cycle.json");
  graphs.emplace_back(c4.graph, c4.s.d);
  std::mt19937 rng(9);
  for (const auto& [g, d] : graphs) {
    const IntegerMatrix l = laplacian(g, d);
    const std::size_t n = g.vertex_count();
    for (std::size_t xm = 0; xm < (1u << n); ++xm) {
      for (std::size_t ym = 0; ym < (1u << n); ++ym) {
        std::vector<VertexId> xs, ys;
        std::vector<std::size_t> rows, cols;
        for (std::size_t i = 0; i < n; ++i) {
          if (xm >> i & 1) xs.push_back(g.id(i)), rows.push_back(i);
          if (ym >> i & 1) ys.push_back(g.id(i)), cols.push_back(i);
        }
        if (xs.size() > ys.size()) continue;
        ++pairs;
        const bool fast = clearable(g, d, xs, ys);
        // Clear a random divisor and every unit divisor on X by firing Y.
        const IntegerMatrix block = l.submatrix(rows, cols);
        bool simulated = true;
        for (std::size_t i = 0; i <= rows.size() && simulated; ++i) {
          Divisor delta(n, 0);
          if (i < rows.size()) {
            delta[rows[i]] = 1;
          } else {
            for (auto& x : delta) x = static_cast<long>(rng() % 9) - 4;
          }
          IntegerVector want;
          for (std::size_t r : rows) want.push_back(delta[r]);
          const auto firing = testkit::lattice_solve(block, want);
          if (!firing) {
            simulated = false;
            break;
          }
          for (std::size_t j = 0; j < cols.size(); ++j) delta = fire(g, d, delta, ys[j], (*firing)[j]);
          for (std::size_t r : rows) simulated = simulated && delta[r] == 0;
        }
        v.require(fast == simulated, "clearability on " + std::to_string(n) + " vertices");
        if (!v.pass) return;
      }
    }
  }

  std::size_t starlike = 0;
  for (const Tree& t : testkit::trees_up_to(9)) {
    if (!t.is_starlike()) continue;
    const std::int64_t bound = t.vertex_count() <= 7 ? 32 : 12;
    for (const auto& s : enumerate_structures(t, {bound, 12})) {
      IntegerVector a = smith_diagonal(reduce_to_lstar(t, s));
      IntegerVector b = smith_diagonal(laplacian(t.graph(), s.d));
      a.resize(b.size(), 1);
      std::sort(a.begin(), a.end(), [](const Integer& x, const Integer& y) { return abs(x) < abs(y); });
      std::sort(b.begin(), b.end(), [](const Integer& x, const Integer& y) { return abs(x) < abs(y); });
      std::rotate(a.begin(), std::find(a.begin(), a.end(), Integer(1)), a.end());
      std::rotate(b.begin(), std::find(b.begin(), b.end(), Integer(1)), b.end());
      bool same = a.size() == b.size();
      for (std::size_t i = 0; same && i < a.size(); ++i) same = abs(a[i]) == abs(b[i]);
      v.require(same, "padding identity");
      if (!v.pass) return;
      ++starlike;
    }
  }
  v.note << minors << " determinantal divisors, " << pairs << " (X,Y) pairs, " << starlike
         << " starlike structures";
}

void path_counts(Verdict& v) {
  const std::size_t expected[] = {1, 2, 5, 14};
  for (std::size_t n = 2; n <= 5; ++n) {
    const Tree p = testkit::path(n);
    std::int64_t bound = 2;
    while (!saturated(p, {bound, 12})) bound *= 2;
    const std::size_t c = count_structures(p, {bound, 12});
    v.require(c == expected[n - 2], "P" + std::to_string(n) + " gives " + std::to_string(c));
    v.note << (n == 2 ? "" : ", ") << "P" << n << ": " << c << " (saturated at " << bound << ")";
  }
}

}  // namespace

int main(int argc, char** argv) {
  const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  const std::vector<std::pair<const char*, std::function<void(Verdict&)>>> criteria{
      {"four-cycle chip-firing example", four_cycle},
      {"star merge with additive group", star_merge},
      {"broom for (3,18)", broom},
      {"starlike group formula on the broom", starlike_example},
      {"two-matching and iota on the 22-vertex tree", many_leaf_invariants},
      {"iota on the two small trees", small_iota},
      {"(4)^7 on a subdivision with iota 3", end_to_end},
      {"oracle sweeps over trees with at most 8 vertices", sweeps},
      {"matrix-level oracles", matrix_oracles},
      {"path enumeration counts", path_counts},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(start);
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": "
              << criteria[i].first << " (" << v.note.str() << ") [" << secs << "s]\n";
    failures += v.pass ? 0 : 1;
  }
  std::cout << criteria.size() - failures << "/" << criteria.size() << " criteria pass\n";
  return strict && failures > 0 ? 1 : 0;
}
