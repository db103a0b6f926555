#pragma once

#include <vector>

#include "critforge/abelian_group.hpp"
#include "critforge/arith_structure.hpp"
#include "critforge/graph.hpp"

namespace critforge {

struct MergedStructure {
  Graph graph;
  ArithmeticalStructure structure;
  /// Where each input vertex ended up.
  std::map<VertexId, VertexId> left_ids;
  std::map<VertexId, VertexId> right_ids;
  /// Multipliers applied to r on each side before normalizing.
  Integer left_scale;
  Integer right_scale;
};

/// Glues x in g1 to y in g2 and combines the structures: r is scaled by
/// r2(y)/g on g1 and by r1(x)/g on g2 (g their gcd), d adds at the glued
/// vertex. Throws DivisibilityViolation when an input fails validation.
MergedStructure merge_structures(const Graph& g1, const VertexId& x,
                                 const ArithmeticalStructure& s1,
                                 const Graph& g2, const VertexId& y,
                                 const ArithmeticalStructure& s2);

struct MergeReport {
  AbelianGroup left;
  AbelianGroup right;
  AbelianGroup merged;
  /// merged equals left + right.
  bool additive = false;
  Integer gcd;
  /// |merged| = |left| |right| gcd^2.
  bool order_identity = false;
};

MergeReport check_merge_additivity(const Graph& g1, const VertexId& x,
                                   const ArithmeticalStructure& s1,
                                   const Graph& g2, const VertexId& y,
                                   const ArithmeticalStructure& s2);

/// Per-tentacle data of a structure on a starlike tree, tentacles sorted by
/// d* descending, then leaf identifier.
struct StarlikeSummary {
  VertexId center;
  Integer r0;
  Integer d0;
  std::vector<VertexId> leaves;
  /// r0 / r(leaf).
  IntegerVector dstar;
  /// r(tentacle vertex next to the center) / r(leaf).
  IntegerVector e;
};

/// Throws NotStarlike, DivisibilityViolation.
StarlikeSummary starlike_summary(const Tree& s, const ArithmeticalStructure& a);

/// (leaves + 1)-square matrix with diagonal d*_1..d*_l, d0, last column -e,
/// last row -1. Padded with an identity it has the Smith form of L(s, d).
IntegerMatrix reduce_to_lstar(const Tree& s, const ArithmeticalStructure& a);

/// K with K + (Z/r0)^2 = sum Z/d*_i.
AbelianGroup starlike_critical_group(const Tree& s,
                                     const ArithmeticalStructure& a);

}  // namespace critforge
