#include "critforge/merge_star.hpp"

#include <algorithm>
#include <numeric>

#include "critforge/errors.hpp"

namespace critforge {

namespace {

void require_valid(const Graph& g, const ArithmeticalStructure& s) {
  const ValidationReport report = validate(g, s);
  if (!report) throw Error(ErrorKind::DivisibilityViolation, report.diagnostic);
}

Integer gcd_of(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace

MergedStructure merge_structures(const Graph& g1, const VertexId& x,
                                 const ArithmeticalStructure& s1,
                                 const Graph& g2, const VertexId& y,
                                 const ArithmeticalStructure& s2) {
  require_valid(g1, s1);
  require_valid(g2, s2);
  const std::size_t xi = g1.index_of(x);
  const std::size_t yi = g2.index_of(y);
  const Integer& a = s1.r[xi];
  const Integer& b = s2.r[yi];
  const Integer common = gcd_of(a, b);

  WedgeResult w = wedge(g1, x, g2, y);
  MergedStructure out{std::move(w.graph), {}, std::move(w.left_ids),
                      std::move(w.right_ids), b / common, a / common};
  const std::size_t n = out.graph.vertex_count();
  out.structure.d.assign(n, 0);
  out.structure.r.assign(n, 0);
  for (std::size_t i = 0; i < g1.vertex_count(); ++i) {
    const std::size_t j = out.graph.index_of(out.left_ids.at(g1.id(i)));
    out.structure.r[j] = s1.r[i] * out.left_scale;
    out.structure.d[j] = s1.d[i];
  }
  for (std::size_t i = 0; i < g2.vertex_count(); ++i) {
    const std::size_t j = out.graph.index_of(out.right_ids.at(g2.id(i)));
    if (i == yi) {
      out.structure.d[j] += s2.d[i];
      continue;
    }
    out.structure.r[j] = s2.r[i] * out.right_scale;
    out.structure.d[j] = s2.d[i];
  }

  Integer content = 0;
  for (const Integer& v : out.structure.r) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  }
  if (content != 1) {
    for (Integer& v : out.structure.r) v /= content;
  }
  const ValidationReport report = validate(out.graph, out.structure);
  if (!report) {
    throw Error(ErrorKind::InternalInconsistency,
                "merged structure invalid: " + report.diagnostic);
  }
  return out;
}

MergeReport check_merge_additivity(const Graph& g1, const VertexId& x,
                                   const ArithmeticalStructure& s1,
                                   const Graph& g2, const VertexId& y,
                                   const ArithmeticalStructure& s2) {
  const MergedStructure m = merge_structures(g1, x, s1, g2, y, s2);
  MergeReport report;
  report.left = critical_group(g1, s1);
  report.right = critical_group(g2, s2);
  report.merged = critical_group(m.graph, m.structure);
  report.additive = report.merged == report.left.direct_sum(report.right);
  report.gcd = gcd_of(s1.r[g1.index_of(x)], s2.r[g2.index_of(y)]);
  report.order_identity = report.merged.order() == report.left.order() *
                                                        report.right.order() *
                                                        report.gcd * report.gcd;
  return report;
}

StarlikeSummary starlike_summary(const Tree& s,
                                 const ArithmeticalStructure& a) {
  if (!s.is_starlike()) {
    throw Error(ErrorKind::NotStarlike,
                "tree has " + std::to_string(s.branch_vertices().size()) +
                    " vertices of degree at least 3");
  }
  require_valid(s.graph(), a);
  const std::size_t c = s.branch_vertices().front();

  struct Row {
    VertexId leaf;
    Integer dstar;
    Integer e;
  };
  std::vector<Row> rows;
  for (const Tentacle& t : tentacles(s).tentacles) {
    const Integer& leaf_r = a.r[s.index_of(t.leaf())];
    const Integer& first_r = a.r[s.index_of(t.vertices.front())];
    rows.push_back({t.leaf(), a.r[c] / leaf_r, first_r / leaf_r});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& p, const Row& q) {
    return p.dstar > q.dstar;
  });

  StarlikeSummary out{s.id(c), a.r[c], a.d[c], {}, {}, {}};
  for (Row& row : rows) {
    out.leaves.push_back(std::move(row.leaf));
    out.dstar.push_back(std::move(row.dstar));
    out.e.push_back(std::move(row.e));
  }
  return out;
}

IntegerMatrix reduce_to_lstar(const Tree& s, const ArithmeticalStructure& a) {
  const StarlikeSummary sum = starlike_summary(s, a);
  const std::size_t l = sum.dstar.size();
  IntegerMatrix m(l + 1, l + 1);
  for (std::size_t i = 0; i < l; ++i) {
    m(i, i) = sum.dstar[i];
    m(i, l) = -sum.e[i];
    m(l, i) = -1;
  }
  m(l, l) = sum.d0;
  return m;
}

AbelianGroup starlike_critical_group(const Tree& s,
                                     const ArithmeticalStructure& a) {
  const StarlikeSummary sum = starlike_summary(s, a);
  const AbelianGroup all = AbelianGroup::from_orders(sum.dstar);
  if (sum.r0 == 1) return all;
  return quotient_strip(all, AbelianGroup(std::vector<Integer>{sum.r0, sum.r0}));
}

}  // namespace critforge
