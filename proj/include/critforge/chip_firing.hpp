#pragma once

#include <optional>
#include <span>

#include "critforge/arith_structure.hpp"
#include "critforge/graph.hpp"
#include "critforge/integer_matrix.hpp"
#include "critforge/tree_decomp.hpp"

namespace critforge {

/// Chip counts aligned with the graph's vertex order.
using Divisor = IntegerVector;

/// delta - times * (column v of diag(d) - A). Negative `times` borrows.
/// Throws UnknownVertex, DimensionMismatch.
Divisor fire(const Graph& g, const VertexValues& d, const Divisor& delta,
             const VertexId& v, const Integer& times = 1);

/// sum r(v) delta(v). Throws DimensionMismatch.
Integer divisor_degree(const Divisor& delta, const VertexValues& r);

/// Firing vector x with L x = a - b, or nullopt when a and b are not
/// equivalent.
std::optional<IntegerVector> equivalent(const Graph& g, const VertexValues& d,
                                        const Divisor& a, const Divisor& b);

/// Least k >= 1 with k * delta principal. Throws NonzeroDegree.
Integer order_in_group(const Graph& g, const ArithmeticalStructure& s,
                       const Divisor& delta);

enum class SweepDirection {
  /// Empties the tentacle; chips collect at the attachment side.
  Inward,
  /// Empties the attachment and all tentacle vertices but the leaf.
  Outward,
};

/// result = input - L * firing.
struct Reduction {
  Divisor divisor;
  IntegerVector firing;
};

Reduction sweep_tentacle(const Graph& g, const VertexValues& d,
                         const Divisor& delta, const Tentacle& tentacle,
                         SweepDirection direction);

/// Empties chain[1..] by borrowing down the chain toward chain[0].
Reduction sweep_chain(const Graph& g, const VertexValues& d,
                      const Divisor& delta, std::span<const VertexId> chain);

/// Equivalent divisor supported on at most decomposition.excess() + 1
/// vertices, built piece by piece from tentacle sweeps.
Reduction reduce_support(const Tree& t, const VertexValues& d,
                         const Divisor& delta,
                         const StarlikeDecomposition& decomposition);

/// Whether every divisor can be cleared on X by firing only at Y, decided by
/// the gcd of the |X| x |X| minors of L[X, Y] being 1.
/// Throws SizeViolation when |X| > |Y|, UnknownVertex.
bool clearable(const Graph& g, const VertexValues& d,
               std::span<const VertexId> x, std::span<const VertexId> y);

std::size_t support_size(const Divisor& delta);

}  // namespace critforge
