#pragma once

#include <cstddef>
#include <vector>

#include "critforge/abelian_group.hpp"
#include "critforge/arith_structure.hpp"
#include "critforge/graph.hpp"

namespace critforge {

/// Starlike tree whose tentacles are m+1 single-vertex prongs and one tail.
struct Broom {
  Tree tree;
  ArithmeticalStructure structure;
  VertexId center;
  /// Prong leaves; the last one carries r = 1.
  std::vector<VertexId> prongs;
  /// Tail from the center outward.
  std::vector<VertexId> tail;
};

/// Broom with m+1 prongs whose critical group is `target`. Vertices are
/// named "c", "p1".."p<m+1>", "t1"..; the trivial group gets the Laplacian
/// structure and a one-vertex tail.
/// Throws TooManyFactors, InvalidArgument (m < 1).
Broom broom_with_group(const AbelianGroup& target, std::size_t m);

struct Realization {
  Tree tree;
  ArithmeticalStructure structure;
};

/// Structure with critical group `target` on a subdivision of t whose
/// splitting irregularity number is beta. Original identifiers are kept.
/// Throws BetaOutOfRange, TooManyFactors, PathWithNontrivialTarget.
Realization realize_on_subdivision(const Tree& t, const AbelianGroup& target,
                                   std::size_t beta);

/// Any tree carrying `target`: a broom, or an edge for the trivial group.
Realization realize_group(const AbelianGroup& target);

}  // namespace critforge
