#include "cutideal/json_io.hpp"

#include <algorithm>
#include <functional>

#include "cutideal/error.hpp"

namespace cutideal::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

Json edge_to_json(const Edge& e) { return Json::array({e.a, e.b}); }

Edge edge_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("edge must be a pair of integers");
  return Edge(as_int(j[0], "edge endpoint"), as_int(j[1], "edge endpoint"));
}

}  // namespace

Json parse_json(std::string_view text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string(what) + " is not valid JSON: " + e.what());
  }
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(edge_to_json(e));
  return Json{{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) { return parse_graph(j.dump()); }

Json cut_to_json(Cut c) {
  Json out = Json::array();
  for (int v : members(c.side)) out.push_back(v);
  return out;
}

Cut cut_from_json(const Json& j, const Graph& g) {
  if (!j.is_array()) throw ParseError("cut must be a vertex list");
  VertexSet side = 0;
  int previous = -1;
  for (const Json& x : j) {
    const int v = as_int(x, "cut vertex");
    if (v <= previous) throw ParseError("cut vertex list must be strictly increasing");
    if (v >= g.vertex_count()) throw ParseError("cut vertex out of range");
    side |= singleton(v);
    previous = v;
  }
  if (!contains(side, 0)) throw ParseError("cut must list the side containing vertex 0");
  return Cut{side};
}

Json monomial_to_json(const CutMonomial& m) {
  Json out = Json::array();
  for (const Cut& c : m.cuts()) out.push_back(cut_to_json(c));
  return out;
}

CutMonomial monomial_from_json(const Json& j, const Graph& g) {
  if (!j.is_array()) throw ParseError("monomial must be a list of cuts");
  std::vector<Cut> cuts;
  for (const Json& c : j) cuts.push_back(cut_from_json(c, g));
  return CutMonomial(std::move(cuts));
}

Json exponents_to_json(const Graph& g, const EdgeExponentVector& x) {
  Json out = Json::array();
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.push_back(Json{{"edge", edge_to_json(g.edges()[i])}, {"s", x[i].s}, {"t", x[i].t}});
  }
  return out;
}

EdgeExponentVector exponents_from_json(const Json& j, const Graph& g) {
  if (!j.is_array() || j.size() != g.edge_count()) {
    throw ParseError("exponent vector must have one entry per edge");
  }
  std::vector<EdgeExponent> entries(g.edge_count());
  std::vector<bool> seen(g.edge_count(), false);
  for (const Json& item : j) {
    const int idx = g.edge_index(edge_from_json(field(item, "edge")));
    if (idx < 0 || seen[static_cast<std::size_t>(idx)]) {
      throw ParseError("exponent entry names an unknown or repeated edge");
    }
    seen[static_cast<std::size_t>(idx)] = true;
    entries[static_cast<std::size_t>(idx)] = {as_int(field(item, "s"), "s"),
                                              as_int(field(item, "t"), "t")};
  }
  return EdgeExponentVector(std::move(entries));
}

Json binomial_to_json(const Binomial& b) {
  return Json{{"lhs", monomial_to_json(b.lhs())}, {"rhs", monomial_to_json(b.rhs())}};
}

Binomial binomial_from_json(const Json& j, const Graph& g) {
  try {
    return Binomial(monomial_from_json(field(j, "lhs"), g), monomial_from_json(field(j, "rhs"), g));
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid binomial: ") + e.what());
  }
}

Json generating_set_to_json(const GeneratingSet& s) {
  Json binomials = Json::array();
  for (const Binomial& b : s.binomials) binomials.push_back(binomial_to_json(b));
  return Json{{"graph", graph_to_json(s.graph)},
              {"binomials", binomials},
              {"max_degree_needed", s.max_degree}};
}

GeneratingSet generating_set_from_json(const Json& j) {
  GeneratingSet s;
  s.graph = graph_from_json(field(j, "graph"));
  const Json& list = field(j, "binomials");
  if (!list.is_array()) throw ParseError("\"binomials\" must be an array");
  for (const Json& b : list) s.binomials.push_back(binomial_from_json(b, s.graph));
  s.max_degree = j.contains("max_degree_needed") ? as_int(j.at("max_degree_needed"), "max_degree_needed")
                                                 : 0;
  return s;
}

Json trace_to_json(const std::vector<TraceEntry>& trace) {
  Json out = Json::array();
  for (const TraceEntry& t : trace) {
    out.push_back(Json{{"graph", graph_to_json(t.graph)},
                       {"rule", t.rule},
                       {"rewritten", t.rewritten},
                       {"generators", t.generator_count}});
  }
  return out;
}

Json quadratic_basis_to_json(const QuadraticBasis& q) {
  Json out = generating_set_to_json(q.generators);
  out["construction_trace"] = trace_to_json(q.trace);
  return out;
}

Json sp_tree_to_json(const SPTree& t) {
  std::function<Json(int)> node = [&](int id) -> Json {
    const SPNode& n = t.node(id);
    switch (n.kind) {
      case SPKind::Leaf:
        return Json{{"kind", "leaf"}, {"edge", Json::array({n.u, n.v})}};
      case SPKind::Series:
        return Json{{"kind", "series"}, {"shared", n.shared}, {"left", node(n.left)},
                    {"right", node(n.right)}};
      case SPKind::Parallel:
        return Json{{"kind", "parallel"}, {"u", n.u}, {"v", n.v}, {"direct_edge", n.direct_edge},
                    {"left", node(n.left)}, {"right", node(n.right)}};
    }
    return Json{};
  };
  return node(t.root());
}

SPTree sp_tree_from_json(const Json& j, const Graph& host) {
  SPTree tree(host);
  std::function<int(const Json&)> node = [&](const Json& n) -> int {
    const Json& kind = field(n, "kind");
    try {
      if (kind == "leaf") return tree.add_leaf(edge_from_json(field(n, "edge")));
      if (kind == "series") {
        const int left = node(field(n, "left"));
        const int right = node(field(n, "right"));
        return tree.add_series(left, right, as_int(field(n, "shared"), "shared"));
      }
      if (kind == "parallel") {
        const int left = node(field(n, "left"));
        const int right = node(field(n, "right"));
        const int id = tree.add_parallel(left, right, as_int(field(n, "u"), "u"),
                                         as_int(field(n, "v"), "v"));
        if (n.contains("direct_edge") && n.at("direct_edge") != tree.node(id).direct_edge) {
          throw ParseError("direct_edge flag disagrees with the children");
        }
        return id;
      }
    } catch (const DomainError& e) {
      throw ParseError(std::string("invalid tree: ") + e.what());
    }
    throw ParseError("unknown tree node kind");
  };
  tree.set_root(node(j));
  if (!(tree.compose() == host)) throw ParseError("tree does not compose to the graph");
  return tree;
}

std::string cut_key(Cut c) { return cut_to_json(c).dump(); }

Json counts_to_json(const CutTable& t) {
  Json out = Json::object();
  for (const auto& [c, n] : t.counts()) out[cut_key(c)] = n;
  return out;
}

CutTable counts_from_json(const Json& j, const Graph& g) {
  if (!j.is_object()) throw ParseError("counts file must be a JSON object");
  std::map<Cut, std::int64_t> counts;
  for (const auto& [key, value] : j.items()) {
    const Cut c = cut_from_json(parse_json(key, "cut key"), g);
    if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
      throw ParseError("count for " + key + " must be a nonnegative integer");
    }
    if (counts.contains(c)) throw ParseError("cut " + key + " listed twice");
    counts[c] = value.get<std::int64_t>();
  }
  return CutTable(counts);
}

Json marginals_to_json(const MarginalVector& m) {
  Json edges = Json::array();
  for (const Edge& e : m.edges) edges.push_back(edge_to_json(e));
  return Json{{"edges", edges}, {"cut_counts", m.cut_counts}, {"total", m.total}};
}

Json witness_to_json(const GenerationWitness& w) {
  Json components = Json::array();
  for (const auto& comp : w.components) {
    Json members = Json::array();
    for (const CutMonomial& m : comp) members.push_back(monomial_to_json(m));
    components.push_back(members);
  }
  return Json{{"degree", w.degree}, {"components", components}};
}

Json sample_header_to_json(const SampleHeader& h) {
  return Json{{"seed", h.seed}, {"steps", h.steps}, {"burn_in", h.burn_in}, {"thin", h.thin}};
}

}  // namespace cutideal::io
