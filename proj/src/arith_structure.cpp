#include "critforge/arith_structure.hpp"

#include "critforge/errors.hpp"
#include "critforge/smith.hpp"

namespace critforge {

namespace {

void require_cover(const Graph& g, const VertexValues& values,
                   const char* what) {
  if (values.size() != g.vertex_count()) {
    throw Error(ErrorKind::MissingVertexValue,
                std::string(what) + " has " + std::to_string(values.size()) +
                    " entries for " + std::to_string(g.vertex_count()) +
                    " vertices");
  }
}

Integer neighbor_sum(const Graph& g, const VertexValues& r, std::size_t v) {
  Integer sum = 0;
  for (const Neighbor& n : g.neighbors(v)) sum += n.multiplicity * r[n.index];
  return sum;
}

}  // namespace

VertexValues values_from_map(const Graph& g, const VertexMap& values) {
  VertexValues out;
  out.reserve(g.vertex_count());
  for (const VertexId& v : g.vertices()) {
    auto it = values.find(v);
    if (it == values.end()) {
      throw Error(ErrorKind::MissingVertexValue, "no value for vertex " + v);
    }
    out.push_back(it->second);
  }
  return out;
}

VertexMap to_map(const Graph& g, const VertexValues& values) {
  require_cover(g, values, "value vector");
  VertexMap out;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    out[g.id(i)] = values[i];
  }
  return out;
}

ValidationReport validate(const Graph& g, const VertexValues& d,
                          const VertexValues& r) {
  require_cover(g, d, "d");
  require_cover(g, r, "r");
  Integer common = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (sgn(r[v]) <= 0) {
      return {false, "r(" + g.id(v) + ") = " + r[v].get_str() +
                         " is not positive", g.id(v)};
    }
    if (sgn(d[v]) < 0) {
      return {false, "d(" + g.id(v) + ") = " + d[v].get_str() +
                         " is negative", g.id(v)};
    }
    mpz_gcd(common.get_mpz_t(), common.get_mpz_t(), r[v].get_mpz_t());
  }
  if (common != 1) {
    return {false, "r has common factor " + common.get_str(), std::nullopt};
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const Integer sum = neighbor_sum(g, r, v);
    if (d[v] * r[v] != sum) {
      std::string why =
          mpz_divisible_p(sum.get_mpz_t(), r[v].get_mpz_t())
              ? "d(" + g.id(v) + ") * r(" + g.id(v) + ") = " +
                    Integer(d[v] * r[v]).get_str() + " but neighbor sum is " +
                    sum.get_str()
              : "r(" + g.id(v) + ") = " + r[v].get_str() +
                    " does not divide neighbor sum " + sum.get_str();
      return {false, why, g.id(v)};
    }
  }
  return {};
}

ArithmeticalStructure structure_from_r(const Graph& g, VertexValues r) {
  require_cover(g, r, "r");
  Integer common = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (sgn(r[v]) <= 0) {
      throw Error(ErrorKind::InvalidArgument,
                  "r(" + g.id(v) + ") = " + r[v].get_str() +
                      " is not positive");
    }
    mpz_gcd(common.get_mpz_t(), common.get_mpz_t(), r[v].get_mpz_t());
  }
  if (common != 1) {
    for (Integer& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(),
                                      common.get_mpz_t());
  }
  ArithmeticalStructure s;
  s.d.resize(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const Integer sum = neighbor_sum(g, r, v);
    if (!mpz_divisible_p(sum.get_mpz_t(), r[v].get_mpz_t())) {
      throw Error(ErrorKind::DivisibilityViolation,
                  g.id(v) + ": r = " + r[v].get_str() +
                      " does not divide neighbor sum " + sum.get_str());
    }
    mpz_divexact(s.d[v].get_mpz_t(), sum.get_mpz_t(), r[v].get_mpz_t());
  }
  s.r = std::move(r);
  return s;
}

ArithmeticalStructure structure_from_r(const Graph& g, const VertexMap& r) {
  return structure_from_r(g, values_from_map(g, r));
}

ArithmeticalStructure laplacian_structure(const Graph& g) {
  ArithmeticalStructure s;
  s.r.assign(g.vertex_count(), 1);
  s.d.reserve(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    s.d.emplace_back(static_cast<long>(g.degree(v)));
  }
  return s;
}

IntegerMatrix laplacian(const Graph& g, const VertexValues& d) {
  require_cover(g, d, "d");
  const std::size_t n = g.vertex_count();
  IntegerMatrix m(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    m(v, v) = d[v];
    for (const Neighbor& w : g.neighbors(v)) {
      m(v, w.index) = -static_cast<long>(w.multiplicity);
    }
  }
  return m;
}

AbelianGroup critical_group(const Graph& g, const ArithmeticalStructure& s) {
  const IntegerVector diag = smith_diagonal(laplacian(g, s.d));
  std::vector<Integer> factors;
  std::size_t zeros = 0;
  for (const Integer& a : diag) {
    if (sgn(a) == 0) {
      ++zeros;
    } else if (a != 1) {
      factors.push_back(a);
    }
  }
  if (zeros != 1) {
    throw Error(ErrorKind::RankDefect,
                "generalized Laplacian has corank " + std::to_string(zeros) +
                    ", expected 1");
  }
  return AbelianGroup(std::move(factors));
}

Integer tree_order_formula(const Tree& t, const VertexValues& r) {
  require_cover(t.graph(), r, "r");
  Integer numerator = 1;
  Integer denominator = 1;
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    const std::size_t deg = t.degree(v);
    if (deg >= 2) {
      Integer power;
      mpz_pow_ui(power.get_mpz_t(), r[v].get_mpz_t(), deg - 2);
      numerator *= power;
    } else {
      // A lone vertex (degree 0) would contribute r^-2.
      Integer power;
      mpz_pow_ui(power.get_mpz_t(), r[v].get_mpz_t(), 2 - deg);
      denominator *= power;
    }
  }
  if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t())) {
    throw Error(ErrorKind::NonIntegralOrder,
                numerator.get_str() + " / " + denominator.get_str());
  }
  Integer order;
  mpz_divexact(order.get_mpz_t(), numerator.get_mpz_t(),
               denominator.get_mpz_t());
  return order;
}

VertexValues reorder(const Graph& from, const VertexValues& values,
                     const Graph& to) {
  VertexValues out;
  out.reserve(to.vertex_count());
  for (const VertexId& v : to.vertices()) {
    out.push_back(values.at(from.index_of(v)));
  }
  return out;
}

Extension extend_at(const Graph& g, const ArithmeticalStructure& s,
                    const VertexId& v, std::optional<VertexId> name) {
  const std::size_t at = g.index_of(v);
  const VertexId leaf = fresh_id(g, name.value_or(v + "+"));

  std::vector<Edge> edges = g.edges();
  edges.push_back({v, leaf, 1});
  std::vector<VertexId> vertices = g.vertices();
  vertices.push_back(leaf);
  Graph grown = Graph::build(vertices, edges);

  ArithmeticalStructure out;
  out.d.resize(grown.vertex_count());
  out.r.resize(grown.vertex_count());
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const std::size_t j = grown.index_of(g.id(i));
    out.d[j] = s.d[i];
    out.r[j] = s.r[i];
  }
  const std::size_t y = grown.index_of(leaf);
  out.r[y] = s.r[at];
  out.d[y] = 1;
  out.d[grown.index_of(v)] += 1;
  return {std::move(grown), std::move(out), leaf};
}

}  // namespace critforge
