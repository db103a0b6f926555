#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "critforge/graph.hpp"

namespace critforge {

/// Tie-break among peripheral branch vertices.
enum class SplitOrder { LowestId, HighestId };

/// T = wedge(remainder, attach, piece, merge_leaf).
struct StarlikeSplitting {
  Tree piece;
  Tree remainder;
  VertexId center;
  /// Fresh leaf of `piece` adjacent to `center`.
  VertexId merge_leaf;
  /// Neighbor of `center` in T that stays in the remainder.
  VertexId attach;
  /// attach is a leaf of the remainder.
  bool regular = true;
};

/// Splits off a peripheral branch vertex (all incident subtrees but one are
/// bare paths). nullopt when the tree has fewer than two branch vertices.
std::optional<StarlikeSplitting> starlike_split(
    const Tree& t, SplitOrder order = SplitOrder::LowestId);

struct DecompositionPiece {
  Tree tree;
  /// Unset when the piece is a path.
  std::optional<VertexId> center;
  /// Set on every piece but the last: the leaf glued to `attach`.
  std::optional<VertexId> merge_leaf;
  std::optional<VertexId> attach;
  bool regular = true;

  std::size_t leaves() const { return tree.leaf_count(); }
};

struct StarlikeDecomposition {
  /// Splitting order; the last entry is the starlike or path remainder.
  std::vector<DecompositionPiece> pieces;
  std::size_t iota = 0;

  /// sum over pieces of (leaves - 2).
  std::size_t excess() const;
  /// Glues the pieces back together, last to first.
  Tree recompose() const;
};

/// Throws InvalidArgument on a one-vertex tree.
StarlikeDecomposition starlike_decomposition(
    const Tree& t, SplitOrder order = SplitOrder::LowestId);

/// Number of irregular splittings in any starlike decomposition.
std::size_t iota(const Tree& t);

/// Largest edge set meeting every vertex at most twice.
std::size_t two_matching_number(const Tree& t);

/// leaves - 2 - iota, cross-checked against |E| - two_matching_number.
/// Throws InternalInconsistency when they differ.
std::size_t invariant_factor_bound(const Tree& t);

enum class CyclicClass { AllTrivial, AllCyclic, AdmitsNoncyclic };

/// Which critical groups the arithmetical structures on t can have.
CyclicClass cyclic_classification(const Tree& t);

const char* to_string(CyclicClass c);

}  // namespace critforge
