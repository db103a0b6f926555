#include <gtest/gtest.h>

#include "catalog.hpp"
#include "critforge/errors.hpp"
#include "critforge/tree_decomp.hpp"
#include "oracles.hpp"

using namespace critforge;

namespace {

Tree fixture_tree(const std::string& name) { return Tree(testkit::fixture(name).graph); }

std::size_t piece_excess(const StarlikeDecomposition& dec) {
  std::size_t sum = 0;
  for (const auto& p : dec.pieces) sum += p.leaves() - 2;
  return sum;
}

bool has_adjacent_branch_vertices(const Tree& t) {
  for (const Edge& e : t.graph().edges()) {
    if (t.degree(e.u) >= 3 && t.degree(e.v) >= 3) return true;
  }
  return false;
}

Tree double_star() {
  return testkit::tree_of(std::vector<std::pair<std::string, std::string>>{
      {"a", "b"}, {"a", "x1"}, {"a", "x2"}, {"b", "y1"}, {"b", "y2"}});
}

}  // namespace

TEST(Split, StarHasNone) {
  EXPECT_FALSE(starlike_split(testkit::star(3)).has_value());
  EXPECT_FALSE(starlike_split(testkit::path(6)).has_value());
}

TEST(Split, DoubleStarIsIrregular) {
  const auto split = starlike_split(double_star());
  ASSERT_TRUE(split.has_value());
  EXPECT_EQ(split->center, "a");
  EXPECT_EQ(split->attach, "b");
  EXPECT_FALSE(split->regular);
  EXPECT_EQ(split->piece.vertex_count(), 4u);
  EXPECT_EQ(split->remainder.vertex_count(), 3u);
  EXPECT_TRUE(split->piece.graph().find(split->merge_leaf).has_value());
}

TEST(Split, HighestIdPicksOtherEnd) {
  const auto split = starlike_split(double_star(), SplitOrder::HighestId);
  ASSERT_TRUE(split.has_value());
  EXPECT_EQ(split->center, "b");
}

TEST(Decomposition, SevenLeafTree) {
  const Tree t = testkit::seven_leaf_tree();
  const StarlikeDecomposition dec = starlike_decomposition(t);
  EXPECT_EQ(dec.pieces.size(), 3u);
  EXPECT_EQ(dec.iota, 1u);
  EXPECT_EQ(dec.excess(), 4u);
  EXPECT_EQ(piece_excess(dec), 4u);
  // Remainder after the first split: 9 vertices.
  const auto split = starlike_split(t);
  ASSERT_TRUE(split.has_value());
  EXPECT_EQ(split->remainder.vertex_count(), 9u);
  EXPECT_TRUE(dec.recompose().graph() == t.graph());
}

TEST(Decomposition, PathIsOnePiece) {
  const StarlikeDecomposition dec = starlike_decomposition(testkit::path(5));
  EXPECT_EQ(dec.pieces.size(), 1u);
  EXPECT_EQ(dec.iota, 0u);
  EXPECT_EQ(dec.excess(), 0u);
  EXPECT_FALSE(dec.pieces[0].center.has_value());
}

TEST(Decomposition, ManyLeafTree) {
  const StarlikeDecomposition dec = starlike_decomposition(fixture_tree("twelve_leaf_tree.json"));
  EXPECT_EQ(dec.pieces.size(), 7u);
  EXPECT_EQ(dec.iota, 3u);
  for (const auto& p : dec.pieces) EXPECT_EQ(p.leaves(), 3u);
}

TEST(Decomposition, RejectsSingleVertex) {
  const Tree one(Graph::build(std::vector<VertexId>{"x"}, {}));
  EXPECT_THROW(starlike_decomposition(one), Error);
}

TEST(Iota, SmallTrees) {
  EXPECT_EQ(iota(fixture_tree("iota_one.json")), 1u);
  EXPECT_EQ(iota(fixture_tree("iota_two.json")), 2u);
  EXPECT_EQ(iota(fixture_tree("twelve_leaf_tree.json")), 3u);
  EXPECT_EQ(iota(testkit::star(5)), 0u);
  EXPECT_EQ(iota(double_star()), 1u);
}

TEST(TwoMatching, Examples) {
  EXPECT_EQ(two_matching_number(fixture_tree("twelve_leaf_tree.json")), 14u);
  EXPECT_EQ(two_matching_number(testkit::path(2)), 1u);
  EXPECT_EQ(two_matching_number(testkit::path(7)), 6u);
  EXPECT_EQ(two_matching_number(testkit::star(5)), 2u);
  const Tree broom(testkit::fixture("broom_3_18.json").graph);
  EXPECT_EQ(two_matching_number(broom), broom.graph().edges().size() - broom.leaf_count() + 2);
}

TEST(TwoMatching, AgreesWithBruteForce) {
  for (const Tree& t : testkit::trees_up_to(10)) {
    ASSERT_EQ(two_matching_number(t), testkit::brute_two_matching(t));
  }
}

TEST(Bound, Examples) {
  EXPECT_EQ(invariant_factor_bound(fixture_tree("twelve_leaf_tree.json")), 7u);
  EXPECT_EQ(invariant_factor_bound(testkit::path(6)), 0u);
  EXPECT_EQ(invariant_factor_bound(testkit::star(4)), 2u);
}

TEST(Classification, Examples) {
  EXPECT_EQ(cyclic_classification(double_star()), CyclicClass::AllCyclic);
  EXPECT_EQ(cyclic_classification(testkit::path(7)), CyclicClass::AllTrivial);
  EXPECT_EQ(cyclic_classification(testkit::star(4)), CyclicClass::AdmitsNoncyclic);
  EXPECT_EQ(cyclic_classification(testkit::star(3)), CyclicClass::AllCyclic);
  EXPECT_EQ(cyclic_classification(fixture_tree("iota_one.json")), CyclicClass::AdmitsNoncyclic);
  EXPECT_STREQ(to_string(CyclicClass::AllCyclic), "all_cyclic");
}

TEST(Properties, CatalogUpToTen) {
  for (const Tree& t : testkit::trees_up_to(10)) {
    const StarlikeDecomposition low = starlike_decomposition(t, SplitOrder::LowestId);
    const StarlikeDecomposition high = starlike_decomposition(t, SplitOrder::HighestId);
    ASSERT_EQ(low.iota, high.iota);
    const std::size_t leaves = t.leaf_count();
    for (const auto* dec : {&low, &high}) {
      EXPECT_EQ(piece_excess(*dec) + dec->iota + 2, leaves);
      EXPECT_TRUE(dec->recompose().graph() == t.graph());
      for (const auto& p : dec->pieces) EXPECT_LE(p.tree.branch_vertices().size(), 1u);
    }
    EXPECT_LE(2 * (low.iota + 1), leaves);
    EXPECT_EQ(low.iota > 0, has_adjacent_branch_vertices(t));
    EXPECT_EQ(invariant_factor_bound(t), t.graph().edges().size() - two_matching_number(t));
  }
}

TEST(Properties, TwoMatchingAddsAcrossSplits) {
  for (const Tree& t : testkit::trees_up_to(10)) {
    for (SplitOrder order : {SplitOrder::LowestId, SplitOrder::HighestId}) {
      const auto split = starlike_split(t, order);
      if (!split) continue;
      EXPECT_EQ(two_matching_number(t),
                two_matching_number(split->piece) + two_matching_number(split->remainder));
    }
  }
}

TEST(Properties, SubdividingOneEdge) {
  for (const Tree& t : testkit::trees_up_to(9)) {
    const std::size_t nu = two_matching_number(t);
    const std::size_t io = iota(t);
    for (const Edge& e : t.graph().edges()) {
      const Tree sub = subdivide(t, e.u, e.v, 2);
      const std::size_t nu2 = two_matching_number(sub);
      const std::size_t io2 = iota(sub);
      const bool dropped = nu2 == nu && io2 + 1 == io;
      const bool grew = nu2 == nu + 1 && io2 == io;
      EXPECT_TRUE(dropped || grew);
    }
  }
}

TEST(Properties, SubdividingBranchEdgesReachesZero) {
  for (const Tree& t : testkit::trees_up_to(10)) {
    Tree current = t;
    std::size_t last = iota(current);
    for (;;) {
      std::optional<Edge> pick;
      for (const Edge& e : current.graph().edges()) {
        if (current.degree(e.u) >= 3 && current.degree(e.v) >= 3) {
          pick = e;
          break;
        }
      }
      if (!pick) break;
      current = subdivide(current, pick->u, pick->v, 2);
      const std::size_t now = iota(current);
      EXPECT_TRUE(now == last || now + 1 == last);
      last = now;
    }
    EXPECT_EQ(last, 0u);
  }
}

TEST(Properties, NoSingleSubdivisionLowersIota) {
  // Center with two branch neighbors: either edge alone leaves the other.
  const Tree t = testkit::tree_of(std::vector<std::pair<std::string, std::string>>{
      {"o", "a"}, {"o", "b"}, {"o", "x"}, {"a", "a1"}, {"a", "a2"}, {"b", "b1"}, {"b", "b2"}});
  ASSERT_EQ(iota(t), 1u);
  for (const Edge& e : t.graph().edges()) EXPECT_EQ(iota(subdivide(t, e.u, e.v, 2)), 1u);
  EXPECT_EQ(iota(subdivide(subdivide(t, "a", "o", 2), "b", "o", 2)), 0u);
}

TEST(Properties, BranchEdgeNeedNotLowerIota) {
  // a - b - c with two leaves on a and c, one on b.
  const Tree t = testkit::tree_of(std::vector<std::pair<std::string, std::string>>{
      {"a", "b"}, {"b", "c"}, {"a", "a1"}, {"a", "a2"}, {"b", "b1"}, {"c", "c1"}, {"c", "c2"}});
  ASSERT_EQ(iota(t), 1u);
  EXPECT_EQ(iota(subdivide(t, "a", "b", 2)), 1u);
  EXPECT_EQ(two_matching_number(subdivide(t, "a", "b", 2)), two_matching_number(t) + 1);
}
