#include "critforge/cli.hpp"

#include <sstream>

#include "CLI11.hpp"
#include "critforge/chip_firing.hpp"
#include "critforge/construct.hpp"
#include "critforge/enumerate.hpp"
#include "critforge/errors.hpp"
#include "critforge/merge_star.hpp"
#include "critforge/tree_decomp.hpp"
#include "critforge/tree_document.hpp"

namespace critforge::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Integer parse_integer(const std::string& text) {
  Integer out;
  if (text.empty() || out.set_str(text, 10) != 0) {
    throw UsageError("not an integer: '" + text + "'");
  }
  return out;
}

/// "a,b,c" smallest first; entries equal to 1 are the trivial summand.
AbelianGroup parse_group(const std::string& text) {
  std::vector<Integer> factors;
  for (const std::string& part : split(text, ',')) {
    Integer f = parse_integer(part);
    if (f == 1) continue;
    factors.push_back(std::move(f));
  }
  try {
    return AbelianGroup(std::move(factors));
  } catch (const Error& e) {
    throw UsageError(std::string("--group: ") + e.what());
  }
}

/// "v=3,w=-1"; unnamed vertices get 0.
Divisor parse_divisor(const Graph& g, const std::string& text) {
  Divisor out(g.vertex_count(), 0);
  for (const std::string& part : split(text, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) {
      throw UsageError("divisor entry must be vertex=count: '" + part + "'");
    }
    out[g.index_of(part.substr(0, eq))] = parse_integer(part.substr(eq + 1));
  }
  return out;
}

json group_json(const AbelianGroup& g) {
  json factors = json::array();
  for (const Integer& f : g.invariant_factors()) factors.push_back(f.get_str());
  return factors;
}

Tree tree_of(const TreeDocument& doc) { return Tree(doc.graph); }

struct Options {
  std::string input;
  std::string chips;
  std::string against;
  std::string fire_at;
  std::string times = "1";
  std::string left, right, x, y;
  std::string group;
  std::string tree;
  long beta = -1;
  std::int64_t r_bound = 60;
  std::size_t vertex_cap = 12;
  bool saturation = false;
};

json cmd_validate(const Options& o, int& status) {
  const TreeDocument doc = load_document(o.input);
  if (!doc.r) {
    throw Error(ErrorKind::MissingVertexValue, "document has no r values");
  }
  const VertexValues r = values_from_map(doc.graph, *doc.r);
  VertexValues d;
  if (doc.d) {
    d = values_from_map(doc.graph, *doc.d);
  } else {
    try {
      d = structure_from_r(doc.graph, r).d;
    } catch (const Error& e) {
      status = 1;
      return {{"valid", false}, {"diagnostic", e.what()}};
    }
  }
  const ValidationReport report = validate(doc.graph, d, r);
  json out{{"valid", report.valid}};
  if (!report.valid) {
    status = 1;
    out["diagnostic"] = report.diagnostic;
    if (report.vertex) out["vertex"] = *report.vertex;
  }
  return out;
}

json cmd_group(const Options& o) {
  const TreeDocument doc = load_document(o.input);
  const ArithmeticalStructure s = doc.structure();
  const AbelianGroup k = critical_group(doc.graph, s);
  json out{{"invariant_factors", group_json(k)},
           {"order", k.order().get_str()}};
  if (doc.graph.is_tree()) {
    out["tree_order_formula"] =
        tree_order_formula(Tree(doc.graph), s.r).get_str();
  }
  return out;
}

json cmd_divisor(const Options& o) {
  const TreeDocument doc = load_document(o.input);
  const ArithmeticalStructure s = doc.structure();
  const Graph& g = doc.graph;
  const Divisor delta = parse_divisor(g, o.chips);
  const Divisor other = parse_divisor(g, o.against);

  const Integer degree = divisor_degree(delta, s.r);
  json out{{"degree", degree.get_str()}};
  if (sgn(degree) == 0) {
    out["order"] = order_in_group(g, s, delta).get_str();
  }
  const auto witness = equivalent(g, s.d, delta, other);
  out["equivalent"] = witness.has_value();
  if (witness) out["firing"] = values_json(g, *witness);
  if (!o.fire_at.empty()) {
    out["fired"] =
        values_json(g, fire(g, s.d, delta, o.fire_at, parse_integer(o.times)));
  }
  return out;
}

json cmd_decompose(const Options& o) {
  const Tree t = tree_of(load_document(o.input));
  const StarlikeDecomposition dec = starlike_decomposition(t);
  json pieces = json::array();
  for (const auto& p : dec.pieces) {
    json piece{{"vertices", p.tree.vertices()},
               {"leaves", p.leaves()},
               {"regular", p.regular}};
    piece["center"] = p.center ? json(*p.center) : json(nullptr);
    piece["merge_leaf"] = p.merge_leaf ? json(*p.merge_leaf) : json(nullptr);
    piece["attach"] = p.attach ? json(*p.attach) : json(nullptr);
    pieces.push_back(std::move(piece));
  }
  return {{"pieces", pieces}, {"iota", dec.iota}, {"excess", dec.excess()}};
}

json cmd_iota(const Options& o) {
  const Tree t = tree_of(load_document(o.input));
  return {{"iota", iota(t)},
          {"leaves", t.leaf_count()},
          {"bound", invariant_factor_bound(t)}};
}

json cmd_nu2(const Options& o) {
  const Tree t = tree_of(load_document(o.input));
  return {{"nu2", two_matching_number(t)}, {"edges", t.edge_count()}};
}

json cmd_merge(const Options& o) {
  const TreeDocument left = load_document(o.left);
  const TreeDocument right = load_document(o.right);
  const ArithmeticalStructure s1 = left.structure();
  const ArithmeticalStructure s2 = right.structure();
  const MergedStructure m =
      merge_structures(left.graph, o.x, s1, right.graph, o.y, s2);
  const MergeReport report =
      check_merge_additivity(left.graph, o.x, s1, right.graph, o.y, s2);
  return {{"document", to_json(m.graph, m.structure)},
          {"groups",
           {{"left", group_json(report.left)},
            {"right", group_json(report.right)},
            {"merged", group_json(report.merged)}}},
          {"additive", report.additive},
          {"gcd", report.gcd.get_str()},
          {"order_identity", report.order_identity}};
}

json cmd_construct(const Options& o) {
  const AbelianGroup target = parse_group(o.group);
  if (o.tree.empty()) {
    if (o.beta >= 0) throw UsageError("--beta needs --tree");
    const Realization r = realize_group(target);
    return to_json(r.tree.graph(), r.structure);
  }
  const Tree t = tree_of(load_document(o.tree));
  std::size_t beta = 0;
  if (o.beta >= 0) {
    beta = static_cast<std::size_t>(o.beta);
  } else if (t.vertex_count() >= 2) {
    beta = iota(t);
  }
  const Realization r = realize_on_subdivision(t, target, beta);
  return to_json(r.tree.graph(), r.structure);
}

json cmd_enumerate(const Options& o) {
  const Tree t = tree_of(load_document(o.input));
  const EnumerationConfig cfg{o.r_bound, o.vertex_cap};
  const auto all = enumerate_structures(t, cfg);
  json list = json::array();
  for (const auto& s : all) {
    list.push_back({{"r", values_json(t.graph(), s.r)},
                    {"d", values_json(t.graph(), s.d)},
                    {"group", group_json(critical_group(t.graph(), s))}});
  }
  json out{{"count", all.size()}, {"r_bound", o.r_bound}, {"structures", list}};
  if (o.saturation) out["saturated"] = saturated(t, cfg);
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Critical groups of arithmetical structures on graphs",
               "critforge"};
  app.require_subcommand(1);
  Options o;

  auto input = [&](CLI::App* sub) {
    sub->add_option("--input,-i", o.input, "TreeDocument JSON file")
        ->required();
  };
  auto* validate_cmd = app.add_subcommand("validate", "Check an (r, d) pair");
  input(validate_cmd);
  auto* group_cmd = app.add_subcommand("group", "Critical group");
  input(group_cmd);
  auto* divisor_cmd =
      app.add_subcommand("divisor", "Degree, order and equivalence");
  input(divisor_cmd);
  divisor_cmd->add_option("--chips", o.chips, "v=n,... (others 0)")
      ->required();
  divisor_cmd->add_option("--against", o.against,
                          "second divisor for equivalence (default 0)");
  divisor_cmd->add_option("--fire", o.fire_at, "vertex to fire");
  divisor_cmd->add_option("--times", o.times, "firings, negative to borrow");
  auto* decompose_cmd =
      app.add_subcommand("decompose", "Starlike decomposition");
  input(decompose_cmd);
  auto* iota_cmd = app.add_subcommand("iota", "Splitting irregularity number");
  input(iota_cmd);
  auto* nu2_cmd = app.add_subcommand("nu2", "2-matching number");
  input(nu2_cmd);
  auto* merge_cmd = app.add_subcommand("merge", "Merge two structures");
  merge_cmd->add_option("--left", o.left, "first document")->required();
  merge_cmd->add_option("--left-vertex", o.x, "vertex of the first graph")->required();
  merge_cmd->add_option("--right", o.right, "second document")->required();
  merge_cmd->add_option("--right-vertex", o.y, "vertex of the second graph")->required();
  auto* construct_cmd =
      app.add_subcommand("construct", "Structure with a given critical group");
  construct_cmd->add_option("--group", o.group, "invariant factors a,b,...")
      ->required();
  construct_cmd->add_option("--tree", o.tree, "tree to subdivide");
  construct_cmd->add_option("--beta", o.beta,
                            "target iota (default iota of the tree)")
      ->check(CLI::NonNegativeNumber);
  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "All structures up to an r bound");
  input(enumerate_cmd);
  enumerate_cmd->add_option("--r-bound", o.r_bound, "largest r value")
      ->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--vertex-cap", o.vertex_cap, "largest tree")
      ->check(CLI::Range(1, 12));
  enumerate_cmd->add_flag("--saturation", o.saturation,
                          "also report whether doubling the bound changes "
                          "the count");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  int status = 0;
  try {
    json result;
    if (*validate_cmd) result = cmd_validate(o, status);
    if (*group_cmd) result = cmd_group(o);
    if (*divisor_cmd) result = cmd_divisor(o);
    if (*decompose_cmd) result = cmd_decompose(o);
    if (*iota_cmd) result = cmd_iota(o);
    if (*nu2_cmd) result = cmd_nu2(o);
    if (*merge_cmd) result = cmd_merge(o);
    if (*construct_cmd) result = cmd_construct(o);
    if (*enumerate_cmd) result = cmd_enumerate(o);
    out << result.dump() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "malformed document: " << e.what() << '\n';
    return 2;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}

}  // namespace critforge::cli
