#include "cutideal/graph.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "cutideal/error.hpp"

namespace cutideal {

namespace {

std::vector<Edge> to_edges(const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<Edge> out;
  out.reserve(pairs.size());
  for (const auto& [u, v] : pairs) {
    if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
    out.emplace_back(u, v);
  }
  return out;
}

}  // namespace

Graph::Graph(int vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges)
    : Graph(vertex_count, to_edges(edges)) {}

Graph::Graph(int vertex_count, const std::vector<Edge>& edges) : n_(vertex_count) {
  if (n_ < 1 || n_ > kMaxVertices) {
    throw DomainError("vertex count must be in 1.." + std::to_string(kMaxVertices) +
                      ", got " + std::to_string(n_));
  }
  adj_.assign(static_cast<std::size_t>(n_), 0);
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.a == e.b) throw DomainError("loop at vertex " + std::to_string(e.a));
    if (e.a < 0 || e.b >= n_) {
      throw DomainError("edge endpoint out of range: [" + std::to_string(e.a) + "," +
                        std::to_string(e.b) + "]");
    }
    if (contains(adj_[static_cast<std::size_t>(e.a)], e.b)) {
      throw DomainError("duplicate edge [" + std::to_string(e.a) + "," +
                        std::to_string(e.b) + "]");
    }
    adj_[static_cast<std::size_t>(e.a)] |= singleton(e.b);
    adj_[static_cast<std::size_t>(e.b)] |= singleton(e.a);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return contains(adj_[static_cast<std::size_t>(u)], v);
}

int Graph::edge_index(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

Graph parse_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("graph file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    throw ParseError("graph file must be an object with keys \"n\" and \"edges\"");
  }
  if (!doc["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
  if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw ParseError("each edge must be a pair of integers");
    }
    pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  try {
    return Graph(doc["n"].get<int>(), pairs);
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid graph: ") + e.what());
  }
}

std::vector<Cut> enumerate_cuts_of(VertexSet ground) {
  std::vector<Cut> out;
  if (ground == 0) return out;
  const VertexSet rest = ground & (ground - 1);  // ground without its minimum
  const VertexSet low = ground & ~rest;
  out.reserve(std::size_t{1} << set_size(rest));
  // Enumerate subsets of `rest` in increasing numeric order.
  VertexSet sub = 0;
  while (true) {
    out.push_back(Cut{sub | low});
    if (sub == rest) break;
    sub = (sub - rest) & rest;
  }
  return out;
}

std::vector<Cut> enumerate_cuts(const Graph& g) { return enumerate_cuts_of(g.vertices()); }

Cut restrict_cut(Cut c, VertexSet s) {
  if (s == 0) throw DomainError("cannot restrict a cut to the empty vertex set");
  return canonical_cut(c.side & s, s);
}

Cut localize_cut(Cut c, VertexSet s) {
  return Cut{compress_bits(restrict_cut(c, s).side, s)};
}

Cut globalize_cut(Cut local, VertexSet s) { return Cut{expand_bits(local.side, s)}; }

Graph add_edge(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw DomainError("cannot add a loop");
  if (g.has_edge(u, v)) {
    throw DomainError("edge [" + std::to_string(std::min(u, v)) + "," +
                      std::to_string(std::max(u, v)) + "] already present");
  }
  std::vector<Edge> edges = g.edges();
  edges.emplace_back(u, v);
  return Graph(g.vertex_count(), edges);
}

Graph contract_edge(const Graph& g, Edge e) {
  if (g.edge_index(e) < 0) throw DomainError("contracted edge is not in the graph");
  // b merges into a; labels above b shift down.
  auto relabel = [&](Vertex x) {
    if (x == e.b) x = e.a;
    return x > e.b ? x - 1 : x;
  };
  std::vector<Edge> out;
  for (const Edge& f : g.edges()) {
    Vertex x = relabel(f.a);
    Vertex y = relabel(f.b);
    if (x == y) continue;
    Edge merged(x, y);
    if (std::find(out.begin(), out.end(), merged) == out.end()) out.push_back(merged);
  }
  return Graph(g.vertex_count() - 1, out);
}

Graph delete_vertex(const Graph& g, Vertex v) {
  if (g.vertex_count() < 2) throw DomainError("cannot delete the last vertex");
  if (v < 0 || v >= g.vertex_count()) throw DomainError("vertex out of range");
  return induced_subgraph(g, g.vertices() & ~singleton(v));
}

Graph subgraph(const Graph& g, VertexSet s, const std::vector<Edge>& edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) {
    if (!contains(s, e.a) || !contains(s, e.b) || !g.has_edge(e.a, e.b)) {
      throw DomainError("subgraph edge outside the vertex set or the graph");
    }
    auto rank = [&](Vertex x) { return std::popcount(s & (singleton(x) - 1)); };
    out.emplace_back(rank(e.a), rank(e.b));
  }
  return Graph(set_size(s), out);
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (s == 0) throw DomainError("induced subgraph on the empty set");
  std::vector<Edge> inside;
  for (const Edge& e : g.edges()) {
    if (contains(s, e.a) && contains(s, e.b)) inside.push_back(e);
  }
  return subgraph(g, s, inside);
}

VertexSet reachable(const Graph& g, Vertex start, VertexSet within) {
  if (!contains(within, start)) return 0;
  VertexSet seen = singleton(start);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for (Vertex x : members(frontier)) next |= g.neighbors(x);
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool is_connected(const Graph& g) { return reachable(g, 0, g.vertices()) == g.vertices(); }

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.vertex_count() << " edges=[";
  bool first = true;
  for (const Edge& e : g.edges()) {
    os << (first ? "" : ",") << "[" << e.a << "," << e.b << "]";
    first = false;
  }
  os << "]";
  return os.str();
}

}  // namespace cutideal
