#pragma once

#include <map>
#include <optional>
#include <string>

#include "critforge/abelian_group.hpp"
#include "critforge/graph.hpp"
#include "critforge/integer_matrix.hpp"

namespace critforge {

/// Per-vertex integers aligned with a graph's canonical vertex order.
using VertexValues = IntegerVector;
using VertexMap = std::map<VertexId, Integer>;

/// A pair (d, r) with (diag(d) - A) r = 0, r positive and primitive.
struct ArithmeticalStructure {
  VertexValues d;
  VertexValues r;

  friend bool operator==(const ArithmeticalStructure&,
                         const ArithmeticalStructure&) = default;
};

struct ValidationReport {
  bool valid = true;
  std::string diagnostic;
  /// First vertex at which a condition fails, when one is vertex-local.
  std::optional<VertexId> vertex;

  explicit operator bool() const { return valid; }
};

/// Throws MissingVertexValue when a vertex has no entry.
VertexValues values_from_map(const Graph& g, const VertexMap& values);
VertexMap to_map(const Graph& g, const VertexValues& values);

/// Checks positivity and primitivity of r and d(v) r(v) = sum a_vw r(w).
/// Throws MissingVertexValue when a vector does not cover the vertex set.
ValidationReport validate(const Graph& g, const VertexValues& d,
                          const VertexValues& r);
inline ValidationReport validate(const Graph& g,
                                 const ArithmeticalStructure& s) {
  return validate(g, s.d, s.r);
}

/// Derives d from r after dividing r by the gcd of its entries.
/// Throws DivisibilityViolation naming the first vertex whose neighbor sum
/// r(v) does not divide.
ArithmeticalStructure structure_from_r(const Graph& g, VertexValues r);
ArithmeticalStructure structure_from_r(const Graph& g, const VertexMap& r);

/// r = 1, d = degree.
ArithmeticalStructure laplacian_structure(const Graph& g);

/// diag(d) - A(g) in canonical vertex order.
IntegerMatrix laplacian(const Graph& g, const VertexValues& d);

/// Torsion part of the cokernel of L(g, d). Throws RankDefect when the Smith
/// form has more than one zero on its diagonal.
AbelianGroup critical_group(const Graph& g, const ArithmeticalStructure& s);

/// prod r(v)^(deg v - 2), evaluated as an exact ratio. Throws
/// NonIntegralOrder when the ratio is not an integer.
Integer tree_order_formula(const Tree& t, const VertexValues& r);

struct Extension {
  Graph graph;
  ArithmeticalStructure structure;
  VertexId new_vertex;
};

/// Hangs a new leaf y off v with r(y) = r(v); d(y) = 1 and d(v) grows by 1.
/// The new leaf is called `name` (default v + "+", primed until unused).
/// Throws UnknownVertex.
Extension extend_at(const Graph& g, const ArithmeticalStructure& s,
                    const VertexId& v,
                    std::optional<VertexId> name = std::nullopt);

/// Re-expresses values given on `from` in the vertex order of `to`; every
/// vertex of `to` must appear in `from` under the same identifier.
VertexValues reorder(const Graph& from, const VertexValues& values,
                     const Graph& to);

}  // namespace critforge
