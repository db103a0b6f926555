#include "critforge/chip_firing.hpp"

#include <algorithm>
#include <numeric>

#include "critforge/errors.hpp"
#include "critforge/smith.hpp"

namespace critforge {

namespace {

void require_length(const Graph& g, const IntegerVector& v, const char* what) {
  if (v.size() != g.vertex_count()) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + " has " + std::to_string(v.size()) +
                    " entries for " + std::to_string(g.vertex_count()) +
                    " vertices");
  }
}

void fire_in_place(const Graph& g, const VertexValues& d, Reduction& state,
                   std::size_t v, const Integer& times) {
  if (sgn(times) == 0) return;
  state.divisor[v] -= times * d[v];
  for (const Neighbor& n : g.neighbors(v)) {
    state.divisor[n.index] += times * n.multiplicity;
  }
  state.firing[v] += times;
}

void sweep_into(const Graph& g, const VertexValues& d, Reduction& state,
                std::span<const VertexId> chain) {
  for (std::size_t j = chain.size(); j-- > 1;) {
    const std::size_t target = g.index_of(chain[j]);
    const std::size_t source = g.index_of(chain[j - 1]);
    const Integer chips = state.divisor[target];
    if (sgn(chips) == 0) continue;
    const std::int64_t link = g.multiplicity(source, target);
    if (link == 0) {
      throw Error(ErrorKind::InvalidArgument,
                  chain[j - 1] + " and " + chain[j] + " are not adjacent");
    }
    if (!mpz_divisible_ui_p(chips.get_mpz_t(), link)) {
      throw Error(ErrorKind::InvalidArgument,
                  "cannot clear " + chain[j] + " through a multiple edge");
    }
    fire_in_place(g, d, state, source, -(chips / link));
  }
}

Reduction start(const Graph& g, const VertexValues& d, const Divisor& delta) {
  require_length(g, d, "d");
  require_length(g, delta, "divisor");
  return {delta, IntegerVector(g.vertex_count(), 0)};
}

std::vector<VertexId> tentacle_chain(const Tentacle& t,
                                     SweepDirection direction) {
  std::vector<VertexId> chain{t.attachment};
  chain.insert(chain.end(), t.vertices.begin(), t.vertices.end());
  if (direction == SweepDirection::Outward) {
    std::reverse(chain.begin(), chain.end());
  }
  return chain;
}

/// Inward along the first tentacle, outward along the others.
void clear_piece(const Graph& g, const VertexValues& d, Reduction& state,
                 const std::vector<Tentacle>& inward_first) {
  for (std::size_t i = 0; i < inward_first.size(); ++i) {
    auto chain = tentacle_chain(inward_first[i], i == 0
                                                     ? SweepDirection::Inward
                                                     : SweepDirection::Outward);
    sweep_into(g, d, state, chain);
  }
}

std::vector<VertexId> path_order(const Tree& path) {
  std::vector<VertexId> out;
  if (path.vertex_count() == 1) return {path.id(0)};
  std::size_t previous = path.leaves().front();
  out.push_back(path.id(previous));
  std::size_t current = path.neighbors(previous)[0].index;
  while (true) {
    out.push_back(path.id(current));
    const auto nbrs = path.neighbors(current);
    if (nbrs.size() == 1) break;
    const std::size_t next =
        nbrs[0].index == previous ? nbrs[1].index : nbrs[0].index;
    previous = current;
    current = next;
  }
  return out;
}

void reduce_from(const Graph& g, const VertexValues& d, Reduction& state,
                 const StarlikeDecomposition& dec, std::size_t i) {
  const DecompositionPiece& piece = dec.pieces[i];
  if (i + 1 == dec.pieces.size()) {
    if (!piece.center) {
      sweep_into(g, d, state, path_order(piece.tree));
      return;
    }
    clear_piece(g, d, state, tentacles(piece.tree).tentacles);
    return;
  }

  std::vector<Tentacle> own;
  for (Tentacle& t : tentacles(piece.tree).tentacles) {
    if (t.leaf() != *piece.merge_leaf) own.push_back(std::move(t));
  }
  sweep_into(g, d, state, tentacle_chain(own.front(), SweepDirection::Inward));
  reduce_from(g, d, state, dec, i + 1);
  for (std::size_t k = 1; k < own.size(); ++k) {
    sweep_into(g, d, state, tentacle_chain(own[k], SweepDirection::Outward));
  }
}

}  // namespace

Divisor fire(const Graph& g, const VertexValues& d, const Divisor& delta,
             const VertexId& v, const Integer& times) {
  const std::size_t at = g.index_of(v);
  Reduction state = start(g, d, delta);
  fire_in_place(g, d, state, at, times);
  return state.divisor;
}

Integer divisor_degree(const Divisor& delta, const VertexValues& r) {
  if (delta.size() != r.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "divisor and r have different lengths");
  }
  Integer total = 0;
  for (std::size_t i = 0; i < delta.size(); ++i) total += r[i] * delta[i];
  return total;
}

std::optional<IntegerVector> equivalent(const Graph& g, const VertexValues& d,
                                        const Divisor& a, const Divisor& b) {
  require_length(g, a, "divisor");
  require_length(g, b, "divisor");
  IntegerVector diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
  return solve_integer(laplacian(g, d), diff);
}

Integer order_in_group(const Graph& g, const ArithmeticalStructure& s,
                       const Divisor& delta) {
  require_length(g, delta, "divisor");
  const Integer degree = divisor_degree(delta, s.r);
  if (sgn(degree) != 0) {
    throw Error(ErrorKind::NonzeroDegree,
                "divisor has degree " + degree.get_str());
  }
  const SmithDecomposition snf = smith_normal_form(laplacian(g, s.d));
  const IntegerVector coords = snf.U.apply(delta);
  Integer order = 1;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i >= snf.rank) {
      if (sgn(coords[i]) != 0) {
        throw Error(ErrorKind::InternalInconsistency,
                    "degree-zero divisor has a free component");
      }
      continue;
    }
    const Integer& alpha = snf.D(i, i);
    Integer common;
    mpz_gcd(common.get_mpz_t(), alpha.get_mpz_t(), coords[i].get_mpz_t());
    const Integer part = alpha / common;
    mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), part.get_mpz_t());
  }
  return order;
}

Reduction sweep_chain(const Graph& g, const VertexValues& d,
                      const Divisor& delta, std::span<const VertexId> chain) {
  Reduction state = start(g, d, delta);
  sweep_into(g, d, state, chain);
  return state;
}

Reduction sweep_tentacle(const Graph& g, const VertexValues& d,
                         const Divisor& delta, const Tentacle& tentacle,
                         SweepDirection direction) {
  const auto chain = tentacle_chain(tentacle, direction);
  return sweep_chain(g, d, delta, chain);
}

Reduction reduce_support(const Tree& t, const VertexValues& d,
                         const Divisor& delta,
                         const StarlikeDecomposition& decomposition) {
  Reduction state = start(t.graph(), d, delta);
  if (t.vertex_count() < 2) return state;
  if (decomposition.pieces.empty()) {
    throw Error(ErrorKind::InvalidArgument, "empty decomposition");
  }
  reduce_from(t.graph(), d, state, decomposition, 0);
  return state;
}

bool clearable(const Graph& g, const VertexValues& d,
               std::span<const VertexId> x, std::span<const VertexId> y) {
  if (x.size() > y.size()) {
    throw Error(ErrorKind::SizeViolation,
                "|X| = " + std::to_string(x.size()) + " exceeds |Y| = " +
                    std::to_string(y.size()));
  }
  std::vector<std::size_t> rows, cols;
  for (const VertexId& v : x) rows.push_back(g.index_of(v));
  for (const VertexId& v : y) cols.push_back(g.index_of(v));
  if (rows.empty()) return true;
  const IntegerMatrix block = laplacian(g, d).submatrix(rows, cols);
  return determinantal_divisor(block, rows.size()) == 1;
}

std::size_t support_size(const Divisor& delta) {
  return static_cast<std::size_t>(
      std::count_if(delta.begin(), delta.end(),
                    [](const Integer& c) { return sgn(c) != 0; }));
}

}  // namespace critforge
